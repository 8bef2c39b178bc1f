#include "conclab/lattice.hpp"

#include <algorithm>

#include "conclab/rat_matrix.hpp"

namespace conclab {

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
}

// row[a] -= f * row[b]
void row_op(IntMatrix& m, std::size_t a, std::size_t b, const Int& f) {
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(a, c) -= f * m.at(b, c);
}

void col_op(IntMatrix& m, std::size_t a, std::size_t b, const Int& f) {
    for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, a) -= f * m.at(r, b);
}

void negate_row(IntMatrix& m, std::size_t a) {
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(a, c) = -m.at(a, c);
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    SmithResult res{a, IntMatrix::identity(rows), IntMatrix::identity(cols)};
    IntMatrix& d = res.d;

    const std::size_t t_max = std::min(rows, cols);
    for (std::size_t t = 0; t < t_max; ++t) {
        // Find the smallest-magnitude nonzero entry in the remaining block.
        std::size_t pr = rows, pc = cols;
        for (std::size_t r = t; r < rows; ++r)
            for (std::size_t c = t; c < cols; ++c) {
                if (d.at(r, c) == 0) continue;
                if (pr == rows || abs_int(d.at(r, c)) < abs_int(d.at(pr, pc))) {
                    pr = r;
                    pc = c;
                }
            }
        if (pr == rows) break;
        if (pr != t) { swap_rows(d, pr, t); swap_rows(res.u, pr, t); }
        if (pc != t) { swap_cols(d, pc, t); swap_cols(res.v, pc, t); }

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (d.at(r, t) == 0) continue;
                const Int f = d.at(r, t) / d.at(t, t);
                row_op(d, r, t, f);
                row_op(res.u, r, t, f);
                if (d.at(r, t) != 0) {
                    // Remainder smaller than pivot: swap it up and restart.
                    swap_rows(d, r, t);
                    swap_rows(res.u, r, t);
                    clean = false;
                }
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (d.at(t, c) == 0) continue;
                const Int f = d.at(t, c) / d.at(t, t);
                col_op(d, c, t, f);
                col_op(res.v, c, t, f);
                if (d.at(t, c) != 0) {
                    swap_cols(d, c, t);
                    swap_cols(res.v, c, t);
                    clean = false;
                }
            }
        }
        if (d.at(t, t) < 0) { negate_row(d, t); negate_row(res.u, t); }
    }

    // Enforce the divisibility chain d_t | d_{t+1}.
    for (std::size_t t = 0; t + 1 < t_max; ++t) {
        for (std::size_t s = t + 1; s < t_max; ++s) {
            if (d.at(t, t) == 0 && d.at(s, s) != 0) {
                swap_rows(d, t, s); swap_rows(res.u, t, s);
                swap_cols(d, t, s); swap_cols(res.v, t, s);
            }
            if (d.at(t, t) == 0 || d.at(s, s) % d.at(t, t) == 0) continue;
            // Classic 2x2 gcd trick: add column s to column t, then clear.
            col_op(d, t, s, Int(-1));
            col_op(res.v, t, s, Int(-1));
            bool clean = false;
            while (!clean) {
                clean = true;
                if (d.at(s, t) != 0) {
                    if (abs_int(d.at(s, t)) < abs_int(d.at(t, t)) || d.at(t, t) == 0) {
                        swap_rows(d, t, s);
                        swap_rows(res.u, t, s);
                    }
                    const Int f = d.at(s, t) / d.at(t, t);
                    row_op(d, s, t, f);
                    row_op(res.u, s, t, f);
                    if (d.at(s, t) != 0) clean = false;
                }
                if (d.at(t, s) != 0) {
                    const Int f = d.at(t, s) / d.at(t, t);
                    col_op(d, s, t, f);
                    col_op(res.v, s, t, f);
                    if (d.at(t, s) != 0) {
                        swap_cols(d, t, s);
                        swap_cols(res.v, t, s);
                        clean = false;
                    }
                }
            }
            if (d.at(t, t) < 0) { negate_row(d, t); negate_row(res.u, t); }
            if (d.at(s, s) < 0) { negate_row(d, s); negate_row(res.u, s); }
        }
    }
    return res;
}

bool spans_direct_summand(const IntMatrix& m) {
    if (m.rows() == 0) return true;
    SmithResult s = smith_normal_form(m);
    const std::size_t k = m.rows();
    for (std::size_t i = 0; i < k; ++i)
        if (s.d.at(i, i) != 1) return false;
    return true;
}

std::optional<IntMatrix> complete_to_unimodular(const IntMatrix& m) {
    const std::size_t k = m.rows(), n = m.cols();
    if (k > n) return std::nullopt;
    if (k == 0) return IntMatrix::identity(n);
    SmithResult s = smith_normal_form(m);
    for (std::size_t i = 0; i < k; ++i)
        if (s.d.at(i, i) != 1) return std::nullopt;
    // u m v = [I_k | 0]  =>  rows of m and the first k rows of v^{-1} span the
    // same sublattice; v^{-1} is the unimodular completion.
    auto vinv_rat = RatMatrix(s.v).inverse();
    if (!vinv_rat) throw InternalError("SNF transform not invertible");
    IntMatrix vinv;
    if (!vinv_rat->to_int_matrix(vinv)) throw InternalError("unimodular inverse not integral");
    return vinv;
}

namespace {

// Recursive enumerator over bounded row-echelon bases (a superset of the
// Hermite normal forms with the same bounds, so nothing HNF-reachable is
// missed). Rows are built top to bottom with strictly ascending pivots;
// entries left of a pivot are zero, the pivot is in 1..bound, and remaining
// entries range over [-bound, bound].
struct HnfSearch {
    const IntMatrix& a;
    int bound;
    std::size_t g, n;
    long budget;
    std::vector<std::size_t> pivots;
    IntMatrix m;
    std::optional<IntMatrix> result;
    bool exhausted_budget = false;

    Int bilinear(std::size_t r, std::size_t s) const {
        Int acc = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (m.at(r, i) == 0) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (m.at(s, j) != 0) acc += m.at(r, i) * a.at(i, j) * m.at(s, j);
        }
        return acc;
    }

    bool row_isotropic_against_previous(std::size_t row) {
        for (std::size_t r = 0; r <= row; ++r)
            if (bilinear(r, row) != 0 || bilinear(row, r) != 0) return false;
        return true;
    }

    void fill_row(std::size_t row, std::size_t col) {
        if (result || exhausted_budget) return;
        if (col == n) {
            if (--budget <= 0) { exhausted_budget = true; return; }
            if (!row_isotropic_against_previous(row)) return;
            if (row + 1 == g) {
                if (!spans_direct_summand(m)) return;
                if (auto q = complete_to_unimodular(m)) result = *q;
                return;
            }
            next_pivot(row + 1, pivots[row] + 1);
            return;
        }
        const std::size_t piv = pivots[row];
        if (col < piv) {
            m.at(row, col) = 0;
            fill_row(row, col + 1);
            return;
        }
        if (col == piv) {
            for (int h = 1; h <= bound && !result && !exhausted_budget; ++h) {
                m.at(row, col) = h;
                fill_row(row, col + 1);
            }
            m.at(row, col) = 0;
            return;
        }
        for (int e = -bound; e <= bound && !result && !exhausted_budget; ++e) {
            m.at(row, col) = e;
            fill_row(row, col + 1);
        }
        m.at(row, col) = 0;
    }

    void next_pivot(std::size_t row, std::size_t from) {
        for (std::size_t p = from; p <= n - (g - row) && !result && !exhausted_budget; ++p) {
            pivots[row] = p;
            fill_row(row, 0);
        }
    }
};

}  // namespace

std::optional<IntMatrix> find_isotropic_summand_hnf(const IntMatrix& a, int bound) {
    if (!a.is_square() || a.rows() % 2 != 0) throw InvalidInput("isotropic search needs a square even-size matrix");
    const std::size_t n = a.rows(), g = n / 2;
    if (g == 0) return IntMatrix::identity(0);
    HnfSearch s{a, bound, g, n, 4'000'000, std::vector<std::size_t>(g), IntMatrix(g, n), std::nullopt};
    s.next_pivot(0, 0);
    return s.result;
}

}  // namespace conclab
