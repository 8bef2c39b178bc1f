#pragma once

#include <optional>
#include <string>

#include "conclab/circle_point.hpp"
#include "conclab/factor.hpp"
#include "conclab/hermitian.hpp"
#include "conclab/seifert.hpp"

namespace conclab {

// Alexander polynomial det(A - t*A^T) in canonical unit-normal form.
// Always satisfies Delta(1) = +-1 and Delta(t) == Delta(1/t) up to units.
LaurentPoly1 alexander(const SeifertMatrix& a);

// Levine-Tristram signature: signature of (1-w)A + (1-conj(w))A^T.
// Exact when w carries an exact tag (1, -1, i, -i), float otherwise.
int lt_signature(const SeifertMatrix& a, const CirclePoint& omega);

// Same, with the zero count and condition diagnostics exposed.
SignatureResult lt_signature_full(const SeifertMatrix& a, const CirclePoint& omega);

// Normalized integral (1/2pi) * Int_{S^1} sigma_K(w) dw of the
// Levine-Tristram signature, with a certified error bound.
struct SignatureIntegral {
    Rat estimate;     // piecewise-constant quadrature, jump points bracketed
    Rat error_bound;  // (total jump magnitude) * (bracket width) / 2pi
    int jump_count = 0;
    bool condition_warning = false;  // some float signature was numerically gray
};

// Samples sigma at `resolution` uniform points and bisects each detected jump
// to a bracket of width 2pi/(64*resolution). resolution >= 16.
SignatureIntegral signature_integral(const SeifertMatrix& a, int resolution = 4096);
// Single-threaded reference implementation; identical output by construction.
SignatureIntegral signature_integral_serial(const SeifertMatrix& a, int resolution = 4096);

// Arf invariant of q(x) = x^T A x mod 2 by exhaustive zero counting:
// Arf = 0 iff #zeros = 2^(2g-1) + 2^(g-1). Refuses 2g > 24.
int arf(const SeifertMatrix& a);
int arf_serial(const SeifertMatrix& a);

// Fox-Milnor test: Delta(t) == f(t) f(1/t) up to units.
struct FoxMilnorResult {
    enum class Status { True, False, Inconclusive } status;
    // Product over one member of each reciprocal factor pair; set iff True.
    std::optional<LaurentPoly1> witness;
};

// Requires Delta(1) = +-1. Inconclusive when the factorization degree bound
// is exceeded.
FoxMilnorResult fox_milnor(const LaurentPoly1& delta);

// Verdict of the algebraic-sliceness decision.
struct SliceVerdict {
    enum class Status { AlgebraicallySlice, NotSlice, Inconclusive } status;
    // AlgebraicallySlice: unimodular Q with the upper-left g x g block of
    // Q A Q^T exactly zero (re-verified before returning).
    std::optional<IntMatrix> certificate;
    // NotSlice: which necessary test failed and the offending value.
    std::string obstruction_name;
    std::string obstruction_value;
    // Inconclusive: the entry bound the metabolizer search ran with.
    int search_bound = 0;
};

// Necessary tests first (Fox-Milnor; sigma at -1 and i where Delta does not
// vanish), then an exact genus-1 decision via the discriminant, then a
// bounded search for rank-g isotropic direct summands when g >= 2.
SliceVerdict algebraically_slice(const SeifertMatrix& a, int search_bound = 5);

}  // namespace conclab
