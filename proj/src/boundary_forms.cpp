#include "conclab/boundary_forms.hpp"

#include <algorithm>

#include "conclab/lattice.hpp"

namespace conclab {

namespace {

IntMatrix zero(std::size_t r, std::size_t c) { return IntMatrix(r, c); }

void check_pair_invariants(const std::vector<std::vector<IntMatrix>>& blocks) {
    const std::size_t m = blocks.size();
    std::vector<std::size_t> sizes(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (blocks[i].size() != m) throw InvalidInput("boundary pair grid must be m x m");
        sizes[i] = blocks[i][i].rows();
        if (blocks[i][i].cols() != sizes[i])
            throw InvalidInput("diagonal boundary pair blocks must be square");
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (blocks[i][j].rows() != sizes[i] || blocks[i][j].cols() != sizes[j])
                throw InvalidInput("boundary pair block has inconsistent size");
            if (i != j && !(blocks[i][j] == blocks[j][i].transpose()))
                throw InvalidInput("boundary pair needs A_ij = A_ji^T off the diagonal");
        }
    for (std::size_t i = 0; i < m; ++i)
        if (!is_unimodular(blocks[i][i] - blocks[i][i].transpose()))
            throw InvalidInput("boundary pair needs A_ii - A_ii^T unimodular");
}

// Row vector u times block times column vector v^T, all integer.
Int pair_value(const IntMatrix& u, const IntMatrix& block, const IntMatrix& v) {
    return (u * block * v.transpose()).at(0, 0);
}

}  // namespace

BoundaryPairMatrix::BoundaryPairMatrix(std::vector<std::vector<IntMatrix>> blocks)
    : blocks_(std::move(blocks)) {
    check_pair_invariants(blocks_);
}

BoundaryPairMatrix BoundaryPairMatrix::empty(std::size_t m) {
    std::vector<std::vector<IntMatrix>> blocks(m, std::vector<IntMatrix>(m));
    return BoundaryPairMatrix(std::move(blocks));
}

std::vector<std::size_t> BoundaryPairMatrix::sizes() const {
    std::vector<std::size_t> out(components());
    for (std::size_t i = 0; i < components(); ++i) out[i] = blocks_[i][i].rows();
    return out;
}

ComponentCongruence::ComponentCongruence(std::vector<IntMatrix> matrices) : q(std::move(matrices)) {
    for (const auto& m : q)
        if (!is_unimodular(m)) throw InvalidInput("component congruence needs unimodular blocks");
}

BoundaryPairMatrix ComponentCongruence::apply(const BoundaryPairMatrix& x) const {
    if (q.size() != x.components())
        throw InvalidInput("component congruence has the wrong number of blocks");
    const std::size_t m = x.components();
    std::vector<std::vector<IntMatrix>> out(m, std::vector<IntMatrix>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (q[i].rows() != x.block(i, j).rows())
                throw InvalidInput("component congruence block size mismatch");
            out[i][j] = q[i] * x.block(i, j) * q[j].transpose();
        }
    return BoundaryPairMatrix(std::move(out));
}

BoundaryPairMatrix bing_double(const SeifertMatrix& a) {
    const IntMatrix& m = a.matrix();
    const IntMatrix mt = m.transpose();
    const IntMatrix diag = IntMatrix::from_blocks({{m, m}, {mt, mt}});
    const IntMatrix off = IntMatrix::from_blocks({{m, m}, {mt, m}});
    return BoundaryPairMatrix({{diag, off}, {off.transpose(), diag}});
}

BoundaryPairMatrix block_sum(const BoundaryPairMatrix& x, const BoundaryPairMatrix& y) {
    if (x.components() != y.components())
        throw InvalidInput("block_sum needs equal component counts");
    const std::size_t m = x.components();
    std::vector<std::vector<IntMatrix>> out(m, std::vector<IntMatrix>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out[i][j] = x.block(i, j).dsum(y.block(i, j));
    return BoundaryPairMatrix(std::move(out));
}

BoundaryPairMatrix negate(const BoundaryPairMatrix& x) {
    const std::size_t m = x.components();
    std::vector<std::vector<IntMatrix>> out(m, std::vector<IntMatrix>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) out[i][j] = -x.block(i, j);
    return BoundaryPairMatrix(std::move(out));
}

bool is_metabolic_collection(const BoundaryPairMatrix& x, const ComponentCongruence& c) {
    for (const std::size_t n : x.sizes())
        if (n % 2 != 0) throw InvalidInput("metabolic test needs even block sizes");
    const BoundaryPairMatrix image = c.apply(x);
    for (std::size_t i = 0; i < x.components(); ++i)
        for (std::size_t j = 0; j < x.components(); ++j) {
            const IntMatrix& b = image.block(i, j);
            for (std::size_t r = 0; r < b.rows() / 2; ++r)
                for (std::size_t col = 0; col < b.cols() / 2; ++col)
                    if (b.at(r, col) != 0) return false;
        }
    return true;
}

IntMatrix build_Qhat(const IntMatrix& q) {
    if (!is_unimodular(q)) throw InvalidInput("build_Qhat needs a unimodular Q");
    if (q.rows() % 2 != 0) throw InvalidInput("build_Qhat needs even size");
    const std::size_t g = q.rows() / 2;
    const IntMatrix ig = IntMatrix::identity(g);
    const IntMatrix zg = zero(g, g);
    const IntMatrix perm = IntMatrix::from_blocks({{ig, zg, zg, zg},
                                                   {zg, zg, ig, zg},
                                                   {zg, ig, zg, zg},
                                                   {zg, zg, zg, ig}});
    return perm * q.dsum(q);
}

bool verify_R_identity(const SeifertMatrix& a, const SeifertMatrix& aprime) {
    const std::size_t n = a.size(), np = aprime.size();
    const IntMatrix in = IntMatrix::identity(n);
    const IntMatrix inp = IntMatrix::identity(np);
    const IntMatrix r = IntMatrix::from_blocks({{in, zero(n, np), zero(n, n), zero(n, np)},
                                                {zero(n, n), zero(n, np), in, zero(n, np)},
                                                {zero(np, n), inp, zero(np, n), zero(np, np)},
                                                {zero(np, n), zero(np, np), zero(np, n), inp}});

    const SeifertMatrix sum(a.matrix().dsum(aprime.matrix()));
    const BoundaryPairMatrix lhs_raw = bing_double(sum);
    const BoundaryPairMatrix rhs = block_sum(bing_double(a), bing_double(aprime));
    const BoundaryPairMatrix lhs = ComponentCongruence({r, r}).apply(lhs_raw);
    return lhs == rhs;
}

IntMatrix build_Ahat(const SeifertMatrix& a) {
    const IntMatrix& m = a.matrix();
    const IntMatrix mt = m.transpose();
    const IntMatrix t = m - mt;
    const IntMatrix tt = t.transpose();
    const IntMatrix z = zero(a.size(), a.size());
    return IntMatrix::from_blocks({{z, t, t, z},
                                   {z, mt, tt, m},
                                   {tt, t, z, t},
                                   {z, mt, z, mt}});
}

ThatShat build_That_Shat(const SeifertMatrix& a) {
    const std::size_t n = a.size();
    const IntMatrix ahat = build_Ahat(a);
    const IntMatrix that = ahat - ahat.transpose();
    if (!is_unimodular(that)) throw InternalError("That must be unimodular");

    const IntMatrix t = a.intersection_form();
    const IntMatrix tt = t.transpose();
    const IntMatrix z = zero(n, n);
    const IntMatrix that_display = IntMatrix::from_blocks({{z, t, z, z},
                                                           {t, tt, z, z},
                                                           {z, z, z, t},
                                                           {z, z, t, tt}});
    if (!(that == that_display)) throw InternalError("That display identity failed");

    const RatMatrix that_q(that);
    const auto that_inv = that_q.inverse();
    if (!that_inv) throw InternalError("unimodular That failed to invert");
    const RatMatrix shat = *that_inv * RatMatrix(ahat);

    const auto t_inv = RatMatrix(t).inverse();
    if (!t_inv) throw InternalError("unimodular T failed to invert");
    const RatMatrix s = *t_inv * RatMatrix(a.matrix());
    const RatMatrix i = RatMatrix::identity(n);
    const RatMatrix zq(n, n);
    const RatMatrix shat_display = RatMatrix::from_blocks({{zq, s, zq, s},
                                                           {zq, i, i, zq},
                                                           {-i, s, zq, s},
                                                           {-i, i, zq, i}});
    if (!(shat == shat_display)) throw InternalError("Shat display identity failed");

    return {that, shat};
}

bool verify_bhat_congruence(const SeifertMatrix& a, const IntMatrix& p1, const IntMatrix& p2) {
    const std::size_t half = 2 * a.size();
    if (p1.rows() != half || !p1.is_square() || p2.rows() != half || !p2.is_square())
        throw InvalidInput("congruence witness has the wrong size");
    if (!is_unimodular(p1) || !is_unimodular(p2)) return false;
    const BoundaryPairMatrix b = bing_double(a);
    const IntMatrix ahat = build_Ahat(a);
    const std::vector<IntMatrix> p{p1, p2};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            const IntMatrix quadrant = ahat.block(i * half, j * half, half, half);
            if (!(p[i] * b.block(i, j) * p[j].transpose() == quadrant)) return false;
        }
    return true;
}

std::optional<std::pair<IntMatrix, IntMatrix>> find_bhat_congruence(const SeifertMatrix& a) {
    const std::size_t n = a.size();
    const IntMatrix i2g = IntMatrix::identity(n);
    const IntMatrix z2g = zero(n, n);
    auto scaled = [&](int c) { return scalar_mul(Int(c), i2g); };

    std::vector<IntMatrix> family;
    // Canonical witness first: [[I, -I], [0, I]].
    family.push_back(IntMatrix::from_blocks({{i2g, scaled(-1)}, {z2g, i2g}}));
    for (int a00 = -1; a00 <= 1; ++a00)
        for (int a01 = -1; a01 <= 1; ++a01)
            for (int a10 = -1; a10 <= 1; ++a10)
                for (int a11 = -1; a11 <= 1; ++a11) {
                    const int det = a00 * a11 - a01 * a10;
                    if (det != 1 && det != -1) continue;
                    family.push_back(IntMatrix::from_blocks(
                        {{scaled(a00), scaled(a01)}, {scaled(a10), scaled(a11)}}));
                }

    for (const auto& p1 : family)
        for (const auto& p2 : family)
            if (verify_bhat_congruence(a, p1, p2)) return std::make_pair(p1, p2);
    return std::nullopt;
}

namespace {

// Deterministic candidate pool: primitive vectors with entries in
// [-bound, bound], first nonzero entry positive, ordered by max |entry|
// then lexicographically.
std::vector<IntMatrix> candidate_vectors(std::size_t n, int bound, std::size_t cap) {
    std::vector<IntMatrix> out;
    if (n == 0) return out;
    std::vector<int> e(n, -bound);
    std::size_t raw = 0;
    while (true) {
        ++raw;
        if (raw > cap) return {};  // pool too large: give up honestly
        int first = 0;
        Int g = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (first == 0 && e[k] != 0) first = e[k] > 0 ? 1 : -1;
            g = boost::multiprecision::gcd(g, Int(e[k] < 0 ? -e[k] : e[k]));
        }
        if (first == 1 && g == 1) {
            IntMatrix v(1, n);
            for (std::size_t k = 0; k < n; ++k) v.at(0, k) = e[k];
            out.push_back(std::move(v));
        }
        std::size_t pos = n;
        while (pos-- > 0) {
            if (e[pos] < bound) {
                ++e[pos];
                break;
            }
            e[pos] = -bound;
            if (pos == 0) {
                std::stable_sort(out.begin(), out.end(),
                                 [](const IntMatrix& x, const IntMatrix& y) {
                                     Int mx = 0, my = 0;
                                     for (std::size_t k = 0; k < x.cols(); ++k) {
                                         mx = std::max(mx, abs_int(x.at(0, k)));
                                         my = std::max(my, abs_int(y.at(0, k)));
                                     }
                                     return mx < my;
                                 });
                return out;
            }
        }
    }
}

struct MetabolizerSearch {
    const BoundaryPairMatrix& x;
    std::vector<std::vector<IntMatrix>> pools;  // per component
    std::vector<std::vector<std::size_t>> chosen;
    long long budget = 4'000'000;

    explicit MetabolizerSearch(const BoundaryPairMatrix& coll, int bound) : x(coll) {
        for (const std::size_t n : x.sizes())
            pools.push_back(candidate_vectors(n, bound, 4'000'000));
        chosen.resize(x.components());
    }

    bool vector_ok(std::size_t comp, const IntMatrix& v) const {
        // Against itself and earlier picks of the same component.
        if (pair_value(v, x.block(comp, comp), v) != 0) return false;
        for (const std::size_t idx : chosen[comp]) {
            const IntMatrix& u = pools[comp][idx];
            if (pair_value(u, x.block(comp, comp), v) != 0) return false;
            if (pair_value(v, x.block(comp, comp), u) != 0) return false;
        }
        // Against every pick of completed earlier components (A_ij = A_ji^T,
        // so one orientation suffices).
        for (std::size_t j = 0; j < comp; ++j)
            for (const std::size_t idx : chosen[j]) {
                const IntMatrix& u = pools[j][idx];
                if (pair_value(u, x.block(j, comp), v) != 0) return false;
            }
        return true;
    }

    bool partial_summand(std::size_t comp) const {
        IntMatrix basis(chosen[comp].size(), x.sizes()[comp]);
        for (std::size_t r = 0; r < chosen[comp].size(); ++r)
            basis.set_block(r, 0, pools[comp][chosen[comp][r]]);
        return spans_direct_summand(basis);
    }

    bool extend(std::size_t comp) {
        const std::size_t need = x.sizes()[comp] / 2;
        if (chosen[comp].size() == need) {
            if (comp + 1 == x.components()) return true;
            return extend(comp + 1);
        }
        const std::size_t start = chosen[comp].empty() ? 0 : chosen[comp].back() + 1;
        for (std::size_t idx = start; idx < pools[comp].size(); ++idx) {
            if (--budget <= 0) return false;
            if (!vector_ok(comp, pools[comp][idx])) continue;
            chosen[comp].push_back(idx);
            if (partial_summand(comp) && extend(comp)) return true;
            chosen[comp].pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<ComponentCongruence> find_metabolizer(const BoundaryPairMatrix& x, int bound) {
    if (bound < 1) throw InvalidInput("metabolizer bound must be >= 1");
    for (const std::size_t n : x.sizes())
        if (n % 2 != 0) throw InvalidInput("metabolizer search needs even block sizes");

    MetabolizerSearch search(x, bound);
    for (std::size_t i = 0; i < x.components(); ++i)
        if (x.sizes()[i] > 0 && search.pools[i].empty()) return std::nullopt;
    if (!search.extend(0)) return std::nullopt;

    std::vector<IntMatrix> qs;
    for (std::size_t i = 0; i < x.components(); ++i) {
        const std::size_t n = x.sizes()[i];
        IntMatrix basis(n / 2, n);
        for (std::size_t r = 0; r < n / 2; ++r)
            basis.set_block(r, 0, search.pools[i][search.chosen[i][r]]);
        const auto q = complete_to_unimodular(basis);
        if (!q) throw InternalError("metabolizer basis failed to complete");
        qs.push_back(*q);
    }
    ComponentCongruence certificate(std::move(qs));
    if (!is_metabolic_collection(x, certificate))
        throw InternalError("metabolizer certificate failed re-verification");
    return certificate;
}

EquivalenceResult equivalent_in_G(const BoundaryPairMatrix& x, const BoundaryPairMatrix& y,
                                  int bound) {
    const BoundaryPairMatrix diff = block_sum(x, negate(y));
    EquivalenceResult out;
    if (auto cert = find_metabolizer(diff, bound)) {
        out.equivalent = true;
        out.certificate = std::move(cert);
    }
    return out;
}

}  // namespace conclab
