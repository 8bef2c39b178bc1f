#pragma once

#include <cmath>
#include <complex>
#include <optional>

#include "conclab/gauss_rat.hpp"

namespace conclab {

// A point omega on the unit circle. The four Gaussian units carry an exact
// tag so downstream computations can stay in exact arithmetic; everything
// else is a double angle.
class CirclePoint {
public:
    enum class Exact { One, MinusOne, I, MinusI };

    CirclePoint(Exact tag) : tag_(tag) {}  // NOLINT: implicit by design
    static CirclePoint one() { return CirclePoint(Exact::One); }
    static CirclePoint minus_one() { return CirclePoint(Exact::MinusOne); }
    static CirclePoint i() { return CirclePoint(Exact::I); }
    static CirclePoint minus_i() { return CirclePoint(Exact::MinusI); }

    // Angle in radians; exact tags are recognized only via the named
    // constructors, never inferred from a double.
    static CirclePoint from_angle(double theta) { return CirclePoint(theta); }

    bool is_exact() const { return tag_.has_value(); }
    std::optional<Exact> exact_tag() const { return tag_; }

    std::complex<double> value() const {
        if (tag_) {
            switch (*tag_) {
                case Exact::One: return {1.0, 0.0};
                case Exact::MinusOne: return {-1.0, 0.0};
                case Exact::I: return {0.0, 1.0};
                case Exact::MinusI: return {0.0, -1.0};
            }
        }
        return {std::cos(angle_), std::sin(angle_)};
    }

    // Exact Gaussian-rational value; only for tagged points.
    GaussRat exact_value() const {
        if (!tag_) throw InvalidInput("circle point has no exact value");
        switch (*tag_) {
            case Exact::One: return {Rat(1), Rat(0)};
            case Exact::MinusOne: return {Rat(-1), Rat(0)};
            case Exact::I: return {Rat(0), Rat(1)};
            default: return {Rat(0), Rat(-1)};
        }
    }

    CirclePoint conj() const {
        if (tag_) {
            switch (*tag_) {
                case Exact::One: return one();
                case Exact::MinusOne: return minus_one();
                case Exact::I: return minus_i();
                case Exact::MinusI: return i();
            }
        }
        return from_angle(-angle_);
    }

    bool is_one() const { return tag_ && *tag_ == Exact::One; }

private:
    explicit CirclePoint(double theta) : angle_(theta) {}

    std::optional<Exact> tag_;
    double angle_ = 0.0;
};

}  // namespace conclab
