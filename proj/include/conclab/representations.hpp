#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "conclab/laurent.hpp"
#include "conclab/rat_matrix.hpp"
#include "conclab/seifert.hpp"

namespace conclab {

// A graded module with a skew form: m orthogonal idempotents summing to the
// identity, an action matrix S, and a nonsingular form phi with
//   phi^T = -phi,   pi_i^T phi = phi pi_i,   S^T phi + phi S = phi.
// The constructor verifies all of these exactly.
class Representation {
public:
    Representation(std::vector<RatMatrix> projectors, RatMatrix action, RatMatrix form);

    std::size_t dim() const { return dim_; }
    std::size_t components() const { return projectors_.size(); }
    const std::vector<RatMatrix>& projectors() const { return projectors_; }
    const RatMatrix& action() const { return action_; }
    const RatMatrix& form() const { return form_; }

    bool operator==(const Representation& o) const = default;

private:
    std::size_t dim_;
    std::vector<RatMatrix> projectors_;
    RatMatrix action_;
    RatMatrix form_;
};

// kappa on objects: M = Q^2g graded trivially (m = 1), phi = T = A - A^T,
// action S = T^-1 A. Rejects the empty matrix.
Representation from_seifert(const SeifertMatrix& a);

// The hat functor on kappa-objects: M-hat = M^4 with pi_1 x = (x1,x2,0,0),
// pi_2 x = (0,0,x3,x4), form T-hat and action S-hat. The first argument must
// equal from_seifert(a).
Representation hat(const Representation& rep, const SeifertMatrix& a);

// det(S - sI), exact. The action must have integer entries (true for every
// representation built here, since the forms are unimodular).
LaurentPoly1 char_poly(const RatMatrix& s);

struct CharPolyReport {
    LaurentPoly1 poly;  // det(S - sI)
    enum class Verdict { Irreducible, Reducible, Inconclusive } verdict;
};

// Irreducibility of det(S - sI) over Q; Inconclusive when the factorization
// degree bound is exceeded. Requires m = 1.
CharPolyReport char_poly_simple(const Representation& rep);

// Exact basis of {H : H pi_i = pi_i' H for all i, H S = S' H}. When every
// projector on both sides is a 0/1 diagonal the grading mask eliminates most
// unknowns before the null-space solve.
struct HomSpaceBasis {
    std::vector<RatMatrix> basis;  // each dim' x dim

    std::size_t dimension() const { return basis.size(); }
};

HomSpaceBasis hom_space(const Representation& rep, const Representation& to);

struct IsoVerdict {
    enum class Kind { Yes, No, Unknown } kind;
    std::optional<RatMatrix> witness;  // invertible intertwiner, Yes only
    std::string reason;                // No / Unknown only
};

// Searches hom_space for an invertible element: identity shortcut, then
// random rational combinations over the fixed seed schedule 0xC0FFEE+k
// (k = 0..19, coefficients in [-3,3]), then an exhaustive grid over {-2..2}
// when the hom space has dimension at most 4.
IsoVerdict is_isomorphic(const Representation& rep, const Representation& to);

struct SimplicityReport {
    // (a) every standard basis vector generates the whole module under
    // words in {pi_i, S}; on failure the generated proper submodule is the
    // not-simple certificate (rows span it).
    bool cyclic_from_all = false;
    std::optional<RatMatrix> invariant_subspace;

    // (b) commutant probe: dimension of hom_space(rep, rep), exact
    // invertibility of each basis element and of 20 pseudorandom
    // combinations; a nonzero singular element is a not-simple certificate.
    std::size_t commutant_dim = 0;
    bool commutant_division = false;
    std::optional<RatMatrix> singular_commutant;

    // m = 1 oracle: simple iff det(S - sI) irreducible. Unset when m > 1 or
    // the factorization was inconclusive.
    std::optional<bool> oracle_irreducible;
    // Oracle says irreducible but a check above failed: a soundness bug in
    // the suite, never expected on honest input.
    bool defect = false;

    // Final verdict: the oracle when available, the checks otherwise. For
    // m = 2 a true value means no obstruction was found.
    bool simple = false;

    std::vector<std::string> warnings;  // det S = 0, det(S - I) = 0
};

SimplicityReport simplicity_suite(const Representation& rep);

}  // namespace conclab
