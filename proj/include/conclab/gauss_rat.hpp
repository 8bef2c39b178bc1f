#pragma once

#include "conclab/exact.hpp"
#include "conclab/rat_matrix.hpp"

namespace conclab {

// Gaussian rational a + b*i with exact components.
struct GaussRat {
    Rat re, im;

    GaussRat() = default;
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussRat(const Rat& r) : re(r), im(0) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    GaussRat conj() const { return {re, -im}; }

    GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
    GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
    GaussRat operator-() const { return {-re, -im}; }
    GaussRat operator*(const GaussRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRat operator/(const GaussRat& o) const {
        const Rat n = o.re * o.re + o.im * o.im;
        if (n == 0) throw InvalidInput("division by zero Gaussian rational");
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
    bool operator==(const GaussRat& o) const = default;

    // |z|^2, exact.
    Rat norm() const { return re * re + im * im; }
};

// Square matrix over the Gaussian rationals, stored as (Re, Im) parts.
struct GaussRatMatrix {
    RatMatrix re, im;

    GaussRatMatrix() = default;
    GaussRatMatrix(RatMatrix r, RatMatrix i) : re(std::move(r)), im(std::move(i)) {
        if (re.rows() != im.rows() || re.cols() != im.cols())
            throw InvalidInput("Re/Im shape mismatch");
    }
    explicit GaussRatMatrix(const RatMatrix& r) : re(r), im(RatMatrix(r.rows(), r.cols())) {}

    std::size_t rows() const { return re.rows(); }
    std::size_t cols() const { return re.cols(); }

    GaussRat at(std::size_t r, std::size_t c) const { return {re.at(r, c), im.at(r, c)}; }
    void set(std::size_t r, std::size_t c, const GaussRat& v) {
        re.at(r, c) = v.re;
        im.at(r, c) = v.im;
    }

    // Conjugate transpose.
    GaussRatMatrix adjoint() const { return {re.transpose(), -im.transpose()}; }

    bool is_hermitian() const { return *this == adjoint(); }
    bool operator==(const GaussRatMatrix& o) const = default;
};

}  // namespace conclab
