#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "conclab/laurent.hpp"

namespace conclab {

// Factorization of a nonzero Laurent polynomial over Z:
//   p = unit_sign * t^unit_exp * content * prod factors[k].first ^ factors[k].second
// with every factor primitive, irreducible over Q, positive leading
// coefficient, and content > 0.
struct PolyFactorization {
    int unit_sign = 1;
    std::int64_t unit_exp = 0;
    Int content = 1;
    std::vector<std::pair<LaurentPoly1, int>> factors;

    LaurentPoly1 product() const;
};

// Kronecker interpolation over divisor tuples; deterministic and exact.
// Returns nullopt when the polynomial degree exceeds degree_bound.
std::optional<PolyFactorization> factor_integer_poly(const LaurentPoly1& p, int degree_bound = 16);

// All positive divisors of |n|, ascending. n must be nonzero.
std::vector<Int> positive_divisors(const Int& n);

// Unique polynomial of degree < points.size() through (points[i], values[i])
// with distinct points; nullopt when a coefficient is not an integer.
std::optional<LaurentPoly1> interpolate_integer(const std::vector<Int>& points,
                                                const std::vector<Int>& values);

}  // namespace conclab
