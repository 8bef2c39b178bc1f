#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "conclab/exact.hpp"
#include "conclab/gauss_rat.hpp"

namespace conclab {

// One-variable Laurent polynomial over Z. Zero coefficients are never stored.
// normalize() produces the canonical unit-normal form: lowest exponent shifted
// to 0 and leading (highest-degree) coefficient positive, so equality of
// normal forms is equality up to units +-t^k.
class LaurentPoly1 {
public:
    LaurentPoly1() = default;
    static LaurentPoly1 constant(const Int& c);
    static LaurentPoly1 monomial(const Int& c, std::int64_t exp);

    const std::map<std::int64_t, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    void set(std::int64_t exp, const Int& c);
    Int coeff(std::int64_t exp) const;

    std::int64_t min_exp() const;  // requires nonzero
    std::int64_t max_exp() const;  // requires nonzero
    std::int64_t degree_span() const { return is_zero() ? 0 : max_exp() - min_exp(); }

    LaurentPoly1 operator+(const LaurentPoly1& o) const;
    LaurentPoly1 operator-(const LaurentPoly1& o) const;
    LaurentPoly1 operator*(const LaurentPoly1& o) const;
    LaurentPoly1 operator-() const;
    bool operator==(const LaurentPoly1& o) const = default;

    LaurentPoly1 normalize() const;
    // t -> 1/t.
    LaurentPoly1 reciprocal() const;
    LaurentPoly1 derivative() const;

    Int eval_int(const Int& t) const;          // requires min_exp() >= 0 or t = +-1
    GaussRat eval_gauss(const GaussRat& t) const;
    std::complex<double> eval_complex(std::complex<double> t) const;

    std::string to_string(const std::string& var = "t") const;

private:
    std::map<std::int64_t, Int> terms_;
};

// Two-variable Laurent polynomial over Z; exponents are (e1, e2) pairs.
class LaurentPoly2 {
public:
    LaurentPoly2() = default;
    static LaurentPoly2 constant(const Int& c);
    static LaurentPoly2 monomial(const Int& c, std::int64_t e1, std::int64_t e2);

    const std::map<std::pair<std::int64_t, std::int64_t>, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    void set(std::int64_t e1, std::int64_t e2, const Int& c);

    LaurentPoly2 operator+(const LaurentPoly2& o) const;
    LaurentPoly2 operator-(const LaurentPoly2& o) const;
    LaurentPoly2 operator*(const LaurentPoly2& o) const;
    bool operator==(const LaurentPoly2& o) const = default;

    // Shifts each variable's lowest exponent to 0 and makes the
    // lexicographically-leading coefficient positive.
    LaurentPoly2 normalize() const;

    // p(t, t) as a one-variable Laurent polynomial.
    LaurentPoly1 diagonal() const;

    std::string to_string() const;

private:
    std::map<std::pair<std::int64_t, std::int64_t>, Int> terms_;
};

}  // namespace conclab
