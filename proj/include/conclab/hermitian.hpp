#pragma once

#include <complex>
#include <vector>

#include "conclab/gauss_rat.hpp"
#include "conclab/rat_matrix.hpp"

namespace conclab {

using CMatrix = std::vector<std::vector<std::complex<double>>>;

struct SignatureResult {
    int signature = 0;
    std::size_t zero_count = 0;
    // Float mode only: some |lambda| fell in the gray window (1e-12, 1e-6)*||H||
    // around the zero cutoff, so the signature is numerically suspect.
    bool condition_warning = false;
    bool exact = false;
};

// Exact mode: symbolic pivoting over the Gaussian rationals, no tolerance.
// Rejects non-hermitian input (exact check).
SignatureResult hermitian_signature(const GaussRatMatrix& h);

// Convenience for real symmetric exact input.
SignatureResult hermitian_signature(const RatMatrix& h);

// Float mode: eigenvalues via a dense self-adjoint solve; |lambda| below
// 1e-9*||H|| counts as zero. Rejects input whose asymmetry exceeds
// 1e-9*||H||, reporting the max asymmetry.
SignatureResult hermitian_signature(const CMatrix& h);

}  // namespace conclab
