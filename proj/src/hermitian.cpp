#include "conclab/hermitian.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>

namespace conclab {

namespace {

// Removes index k from the active list.
void drop(std::vector<std::size_t>& active, std::size_t k) {
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(k));
}

}  // namespace

SignatureResult hermitian_signature(const GaussRatMatrix& h) {
    if (h.rows() != h.cols()) throw InvalidInput("hermitian_signature requires a square matrix");
    if (!h.is_hermitian()) {
        Rat worst = 0;
        for (std::size_t r = 0; r < h.rows(); ++r)
            for (std::size_t c = 0; c < h.cols(); ++c) {
                GaussRat d = h.at(r, c) - h.at(c, r).conj();
                Rat mag = d.norm();
                if (mag > worst) worst = mag;
            }
        std::ostringstream msg;
        msg << "non-hermitian input, max |H_ij - conj(H_ji)|^2 = " << worst;
        throw InvalidInput(msg.str());
    }

    const std::size_t n = h.rows();
    // Working copy indexed through the active list.
    std::vector<std::vector<GaussRat>> w(n, std::vector<GaussRat>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) w[r][c] = h.at(r, c);

    std::vector<std::size_t> active(n);
    for (std::size_t i = 0; i < n; ++i) active[i] = i;

    SignatureResult res;
    res.exact = true;
    while (!active.empty()) {
        // Prefer a nonzero diagonal pivot; it is real by hermitian symmetry.
        std::size_t pi = active.size();
        for (std::size_t k = 0; k < active.size(); ++k)
            if (!w[active[k]][active[k]].is_zero()) { pi = k; break; }
        if (pi < active.size()) {
            const std::size_t i = active[pi];
            const GaussRat d = w[i][i];
            res.signature += sign_of(d.re);
            for (std::size_t a : active)
                for (std::size_t b : active) {
                    if (a == i || b == i) continue;
                    w[a][b] = w[a][b] - w[a][i] * w[i][b] / d;
                }
            drop(active, pi);
            continue;
        }
        // All active diagonal entries vanish; a nonzero off-diagonal entry
        // splits off a hyperbolic plane of signature 0.
        std::size_t oi = active.size(), oj = active.size();
        for (std::size_t a = 0; a < active.size() && oi == active.size(); ++a)
            for (std::size_t b = a + 1; b < active.size(); ++b)
                if (!w[active[a]][active[b]].is_zero()) {
                    oi = a;
                    oj = b;
                    break;
                }
        if (oi == active.size()) {
            // Active block is identically zero: radical.
            res.zero_count += active.size();
            break;
        }
        const std::size_t i = active[oi], j = active[oj];
        const GaussRat hij = w[i][j];
        // Schur complement of the block [[0, h],[conj(h), 0]].
        for (std::size_t a : active)
            for (std::size_t b : active) {
                if (a == i || a == j || b == i || b == j) continue;
                w[a][b] = w[a][b] - w[a][j] * w[i][b] / hij - w[a][i] * w[j][b] / hij.conj();
            }
        drop(active, oj);
        drop(active, oi);
    }
    return res;
}

SignatureResult hermitian_signature(const RatMatrix& h) {
    return hermitian_signature(GaussRatMatrix(h));
}

SignatureResult hermitian_signature(const CMatrix& h) {
    const std::size_t n = h.size();
    for (const auto& row : h)
        if (row.size() != n) throw InvalidInput("hermitian_signature requires a square matrix");

    double norm = 0.0;
    for (const auto& row : h)
        for (const auto& v : row) norm += std::norm(v);
    norm = std::sqrt(norm);

    SignatureResult res;
    res.exact = false;
    if (norm == 0.0) {
        res.zero_count = n;
        return res;
    }

    double asym = 0.0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            asym = std::max(asym, std::abs(h[r][c] - std::conj(h[c][r])));
    if (asym > 1e-9 * norm) {
        std::ostringstream msg;
        msg << "non-hermitian input, max |H_ij - conj(H_ji)| = " << asym;
        throw InvalidInput(msg.str());
    }

    Eigen::MatrixXcd m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                0.5 * (h[r][c] + std::conj(h[c][r]));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);

    const double cutoff = 1e-9 * norm;
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
        const double lam = solver.eigenvalues()(k);
        const double rel = std::abs(lam) / norm;
        if (rel > 1e-12 && rel < 1e-6) res.condition_warning = true;
        if (std::abs(lam) < cutoff)
            ++res.zero_count;
        else if (lam > 0)
            ++res.signature;
        else
            --res.signature;
    }
    return res;
}

}  // namespace conclab
