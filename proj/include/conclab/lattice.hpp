#pragma once

#include <functional>
#include <optional>

#include "conclab/int_matrix.hpp"

namespace conclab {

// U * A * V = D with U, V unimodular and D diagonal (Smith normal form,
// invariant factors nonnegative and in divisibility order).
struct SmithResult {
    IntMatrix d, u, v;
};

SmithResult smith_normal_form(const IntMatrix& a);

// Rows of m span a rank-k direct summand of Z^n iff the SNF of m has k
// invariant factors, all equal to 1.
bool spans_direct_summand(const IntMatrix& m);

// For a k x n basis matrix of a rank-k direct summand, returns a unimodular
// n x n matrix whose first k rows span the same sublattice.
std::optional<IntMatrix> complete_to_unimodular(const IntMatrix& m);

// Searches g x 2g Hermite-normal-form bases M with pivots and entries bounded
// by `bound` such that M A M^T = 0 and M spans a direct summand; returns the
// unimodular completion (first g rows isotropic) or nullopt. Deterministic
// enumeration order.
std::optional<IntMatrix> find_isotropic_summand_hnf(const IntMatrix& a, int bound);

}  // namespace conclab
