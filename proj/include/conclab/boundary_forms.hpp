#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "conclab/rat_matrix.hpp"
#include "conclab/seifert.hpp"

namespace conclab {

// An m-component collection of boundary-pair matrices: an m x m grid of
// integer blocks with A_ij = A_ji^T off the diagonal and A_ii - A_ii^T
// unimodular. These are the G^m(Z) representatives.
class BoundaryPairMatrix {
public:
    explicit BoundaryPairMatrix(std::vector<std::vector<IntMatrix>> blocks);

    // m components, every block 0x0.
    static BoundaryPairMatrix empty(std::size_t m);

    std::size_t components() const { return blocks_.size(); }
    std::vector<std::size_t> sizes() const;
    const IntMatrix& block(std::size_t i, std::size_t j) const { return blocks_[i][j]; }
    const std::vector<std::vector<IntMatrix>>& blocks() const { return blocks_; }

    bool operator==(const BoundaryPairMatrix& o) const = default;

private:
    std::vector<std::vector<IntMatrix>> blocks_;
};

// Per-component change of basis: block (i,j) maps to Q_i A_ij Q_j^T.
struct ComponentCongruence {
    std::vector<IntMatrix> q;

    explicit ComponentCongruence(std::vector<IntMatrix> matrices);

    BoundaryPairMatrix apply(const BoundaryPairMatrix& x) const;
};

// The Bing-double collection B(A): two components, each of size 4g, with
//   A_11 = A_22 = [[A, A], [A^T, A^T]],  A_12 = A_21^T = [[A, A], [A^T, A]].
BoundaryPairMatrix bing_double(const SeifertMatrix& a);

// Blockwise direct sum; the monoid operation of G^m(Z).
BoundaryPairMatrix block_sum(const BoundaryPairMatrix& x, const BoundaryPairMatrix& y);

// Blockwise negation (the group inverse on classes).
BoundaryPairMatrix negate(const BoundaryPairMatrix& x);

// True iff every transformed block Q_i A_ij Q_j^T has an exactly-zero
// upper-left (n_i/2) x (n_j/2) quadrant. Rejects odd block sizes.
bool is_metabolic_collection(const BoundaryPairMatrix& x, const ComponentCongruence& c);

// The 4g x 4g matrix P * diag(Q, Q), where P permutes the four g-blocks as
// rows (1, 3, 2, 4). When Q A Q^T is metabolic, (Qhat, Qhat) metabolizes
// every block of bing_double(A). Rejects non-unimodular Q.
IntMatrix build_Qhat(const IntMatrix& q);

// Checks diag(R,R) * B(A + A') * diag(R^T,R^T) = B(A) + B(A') blockwise for
// the displayed interleaving permutation R.
bool verify_R_identity(const SeifertMatrix& a, const SeifertMatrix& aprime);

// The 8g x 8g matrix over the blocks {0, T, T^T, A, A^T} with T = A - A^T:
//   [[0, T, T, 0], [0, A^T, T^T, A], [T^T, T, 0, T], [0, A^T, 0, A^T]]
// graded 4g + 4g across the two components.
IntMatrix build_Ahat(const SeifertMatrix& a);

struct ThatShat {
    IntMatrix that;  // Ahat - Ahat^T, unimodular
    RatMatrix shat;  // That^{-1} * Ahat, exact
};

// Builds That and Shat and asserts the displayed identities exactly:
// That = [[0,T,0,0],[T,T^T,0,0],[0,0,0,T],[0,0,T,T^T]] and
// Shat = [[0,S,0,S],[0,I,I,0],[-I,S,0,S],[-I,I,0,I]] with S = T^{-1} A.
// A pattern failure is an internal error, never a data error.
ThatShat build_That_Shat(const SeifertMatrix& a);

// Verifies that (P1, P2) exhibits the block congruence carrying bing_double(A)
// to build_Ahat(A) quadrant by quadrant.
bool verify_bhat_congruence(const SeifertMatrix& a, const IntMatrix& p1, const IntMatrix& p2);

// Searches a small deterministic family (scalar 2x2 block patterns over I_2g,
// canonical witness first) for such a pair.
std::optional<std::pair<IntMatrix, IntMatrix>> find_bhat_congruence(const SeifertMatrix& a);

// Joint metabolizer search over all components: primitive short vectors
// (entries bounded by `bound`) assembled into half-rank direct summands with
// every cross-block pairing zero. Returns a verified certificate or nullopt
// (search exhausted / node budget reached), never a refutation.
std::optional<ComponentCongruence> find_metabolizer(const BoundaryPairMatrix& x, int bound);

// X ~ Y in G^m(Z) iff X + (-Y) is algebraically slice; tested by the bounded
// search above, so the answer is a certificate or Inconclusive.
struct EquivalenceResult {
    bool equivalent = false;  // true only with a verified certificate
    std::optional<ComponentCongruence> certificate;
};

EquivalenceResult equivalent_in_G(const BoundaryPairMatrix& x, const BoundaryPairMatrix& y,
                                  int bound = 2);

}  // namespace conclab
