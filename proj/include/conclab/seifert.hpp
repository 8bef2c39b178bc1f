#pragma once

#include <string>
#include <utility>

#include "conclab/int_matrix.hpp"

namespace conclab {

// Seifert matrix of a knot: square of even size 2g with A - A^T unimodular
// (the intersection form T of the surface). Size 0 is the unknot.
class SeifertMatrix {
public:
    explicit SeifertMatrix(IntMatrix a, std::string name = "")
        : a_(std::move(a)), name_(std::move(name)) {
        if (!a_.is_square()) throw InvalidInput("Seifert matrix must be square");
        if (a_.rows() % 2 != 0) throw InvalidInput("Seifert matrix must have even size");
        if (!is_unimodular(a_ - a_.transpose()))
            throw InvalidInput("A - A^T must be unimodular for a Seifert matrix");
    }

    const IntMatrix& matrix() const { return a_; }
    const std::string& name() const { return name_; }
    std::size_t size() const { return a_.rows(); }
    std::size_t genus() const { return a_.rows() / 2; }

    // Intersection form T = A - A^T.
    IntMatrix intersection_form() const { return a_ - a_.transpose(); }

private:
    IntMatrix a_;
    std::string name_;
};

}  // namespace conclab
