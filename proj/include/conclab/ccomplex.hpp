#pragma once

#include <optional>

#include "conclab/circle_point.hpp"
#include "conclab/hermitian.hpp"
#include "conclab/laurent.hpp"

namespace conclab {

// The two generalized Seifert matrices of a 2-component C-complex.
struct CComplexData {
    IntMatrix a, aprime;

    CComplexData(IntMatrix a_, IntMatrix aprime_) : a(std::move(a_)), aprime(std::move(aprime_)) {
        if (!a.is_square() || !aprime.is_square() || a.rows() != aprime.rows())
            throw InvalidInput("C-complex matrices must be square of equal size");
    }
};

// Signature of the hermitian pencil
//   H(w1,w2) = (1-conj(w1))(1-conj(w2)) A  + (1-conj(w1))(1-w2) A'
//            + (1-w1)(1-conj(w2)) A'^T    + (1-w1)(1-w2) A^T.
// Exact when both points carry exact tags; float otherwise. H(1, w2) = 0.
int multivar_signature(const CComplexData& d, const CirclePoint& w1, const CirclePoint& w2);
SignatureResult multivar_signature_full(const CComplexData& d, const CirclePoint& w1,
                                        const CirclePoint& w2);

// Alexander-module verdict for the Bing-double C-complex shape. The module is
// recognized as trivial free exactly when A = A' = 0 (the presentation
// collapses and the one-variable reduction is 1); anything else is reported
// as Other with no claim attached.
struct AlexanderModuleVerdict {
    enum class Kind { TrivialFree, Other } kind;
    std::optional<LaurentPoly2> delta_tilde;  // constant 1 in the TrivialFree case
};

AlexanderModuleVerdict bing_alexander_module(const CComplexData& d);

// Murasugi congruence Arf(L) = Arf(L_1) + Arf(L_2) + (1/2) d^2/dt^2
// Delta_L(t,t) at t=1, all mod 2. The polynomial is consumed as given (no
// unit normalization: the correction term depends on the representative).
// Rejects input whose half second derivative is not an integer.
int murasugi_arf(int arf1, int arf2, const LaurentPoly1& diag);

}  // namespace conclab
