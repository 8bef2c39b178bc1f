#include "conclab/factor.hpp"

#include <algorithm>

namespace conclab {

namespace {

// Dense coefficient vector c[0..deg] for a polynomial with min_exp 0.
using Poly = std::vector<Int>;

Poly to_dense(const LaurentPoly1& p) {
    Poly c(static_cast<std::size_t>(p.max_exp()) + 1);
    for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e)] = v;
    return c;
}

LaurentPoly1 from_dense(const Poly& c) {
    LaurentPoly1 p;
    for (std::size_t e = 0; e < c.size(); ++e) p.set(static_cast<std::int64_t>(e), c[e]);
    return p;
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Int eval(const Poly& p, const Int& x) {
    Int acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Int content_of(const Poly& p) {
    Int g = 0;
    for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
    return g;
}

// Exact division in Q[t] restricted to integer results; returns false when
// q does not divide p over the integers.
bool divide_exact(const Poly& p, const Poly& q, Poly& quot) {
    if (q.empty() || q.back() == 0) throw InternalError("division by denormalized polynomial");
    Poly rem = p;
    const int dq = degree(q);
    const int dp = degree(p);
    if (dp < dq) return false;
    quot.assign(static_cast<std::size_t>(dp - dq) + 1, Int(0));
    for (int k = dp - dq; k >= 0; --k) {
        const Int& lead = rem[static_cast<std::size_t>(k + dq)];
        if (lead == 0) continue;
        if (lead % q.back() != 0) return false;
        const Int f = lead / q.back();
        quot[static_cast<std::size_t>(k)] = f;
        for (int j = 0; j <= dq; ++j)
            rem[static_cast<std::size_t>(k + j)] -= f * q[static_cast<std::size_t>(j)];
    }
    for (const auto& c : rem)
        if (c != 0) return false;
    return true;
}

// Lagrange interpolation through (points[i], values[i]); returns false when
// the result is not an integer polynomial of degree <= d.
bool interpolate(const std::vector<Int>& points, const std::vector<Int>& values, Poly& out) {
    const std::size_t n = points.size();
    // Newton form: divided differences, then expansion.
    std::vector<Rat> dd(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = Rat(values[i]);
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rat(points[i] - points[i - level]);
            if (i == level) break;
        }
    std::vector<Rat> acc{dd[n - 1]};
    for (std::size_t i = n - 1; i-- > 0;) {
        // acc = acc*(t - points[i]) + dd[i], lowest-degree-first.
        std::vector<Rat> next(acc.size() + 1, Rat(0));
        for (std::size_t j = 0; j < acc.size(); ++j) {
            next[j + 1] += acc[j];
            next[j] -= Rat(points[i]) * acc[j];
        }
        next[0] += dd[i];
        acc = std::move(next);
    }
    while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
    out.clear();
    for (const auto& c : acc) {
        if (boost::multiprecision::denominator(c) != 1) return false;
        out.push_back(boost::multiprecision::numerator(c));
    }
    return true;
}

// Finds one irreducible factor of the primitive polynomial p with
// min_degree <= deg(factor) <= deg(p)/2, or reports none (p irreducible).
bool kronecker_find_factor(const Poly& p, int min_degree, Poly& factor, int& found_degree) {
    const int dp = degree(p);
    // Candidate evaluation points in a fixed deterministic order.
    std::vector<Int> point_pool;
    point_pool.push_back(0);
    for (int k = 1; k <= dp + 2; ++k) {
        point_pool.push_back(k);
        point_pool.push_back(-k);
    }
    for (int d = std::max(1, min_degree); d <= dp / 2; ++d) {
        std::vector<Int> points, values;
        for (const Int& a : point_pool) {
            if (static_cast<int>(points.size()) == d + 1) break;
            Int v = eval(p, a);
            if (v == 0) {
                // Rational root: (t - a) is a factor.
                factor = {-a, Int(1)};
                found_degree = 1;
                return true;
            }
            points.push_back(a);
            values.push_back(v);
        }
        std::vector<std::vector<Int>> divisor_sets(points.size());
        for (std::size_t i = 0; i < points.size(); ++i) divisor_sets[i] = positive_divisors(values[i]);

        // Enumerate signed divisor tuples; the first coordinate stays positive
        // since q and -q give the same primitive factor.
        std::vector<std::size_t> idx(points.size(), 0);
        std::vector<int> sgn(points.size(), 1);
        while (true) {
            std::vector<Int> target(points.size());
            for (std::size_t i = 0; i < points.size(); ++i)
                target[i] = sgn[i] > 0 ? divisor_sets[i][idx[i]] : Int(-divisor_sets[i][idx[i]]);
            Poly cand;
            if (interpolate(points, target, cand) && degree(cand) == d) {
                Int c = content_of(cand);
                if (c != 0) {
                    for (auto& coef : cand) coef /= c;
                    if (cand.back() < 0)
                        for (auto& coef : cand) coef = -coef;
                    Poly quot;
                    if (divide_exact(p, cand, quot)) {
                        factor = cand;
                        found_degree = d;
                        return true;
                    }
                }
            }
            // Advance the odometer: sign first (skipping position 0), then index.
            std::size_t pos = points.size();
            for (std::size_t i = points.size(); i-- > 0;) {
                if (i != 0 && sgn[i] > 0) {
                    sgn[i] = -1;
                    pos = i;
                    break;
                }
                sgn[i] = 1;
                if (idx[i] + 1 < divisor_sets[i].size()) {
                    ++idx[i];
                    pos = i;
                    break;
                }
                idx[i] = 0;
            }
            if (pos == points.size()) break;
            for (std::size_t i = pos + 1; i < points.size(); ++i) {
                idx[i] = 0;
                sgn[i] = 1;
            }
        }
    }
    return false;
}

}  // namespace

std::optional<LaurentPoly1> interpolate_integer(const std::vector<Int>& points,
                                                const std::vector<Int>& values) {
    if (points.empty() || points.size() != values.size())
        throw InvalidInput("interpolation needs matching nonempty point/value lists");
    Poly out;
    if (!interpolate(points, values, out)) return std::nullopt;
    return from_dense(out);
}

std::vector<Int> positive_divisors(const Int& n) {
    if (n == 0) throw InvalidInput("divisors of zero");
    const Int a = abs_int(n);
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            small.push_back(d);
            if (d * d != a) large.push_back(a / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

LaurentPoly1 PolyFactorization::product() const {
    LaurentPoly1 acc = LaurentPoly1::monomial(unit_sign * content, unit_exp);
    for (const auto& [f, mult] : factors)
        for (int k = 0; k < mult; ++k) acc = acc * f;
    return acc;
}

std::optional<PolyFactorization> factor_integer_poly(const LaurentPoly1& p, int degree_bound) {
    if (p.is_zero()) throw InvalidInput("factor_integer_poly requires a nonzero polynomial");

    PolyFactorization out;
    out.unit_exp = p.min_exp();
    LaurentPoly1 shifted;
    for (const auto& [e, c] : p.terms()) shifted.set(e - out.unit_exp, c);

    if (shifted.max_exp() > degree_bound) return std::nullopt;

    Poly dense = to_dense(shifted);
    out.unit_sign = dense.back() < 0 ? -1 : 1;
    if (out.unit_sign < 0)
        for (auto& c : dense) c = -c;
    out.content = content_of(dense);
    if (out.content == 0) throw InternalError("zero content for nonzero polynomial");
    for (auto& c : dense) c /= out.content;

    int min_degree = 1;
    while (degree(dense) >= 1) {
        Poly factor;
        int d = 0;
        if (kronecker_find_factor(dense, min_degree, factor, d)) {
            Poly quot;
            if (!divide_exact(dense, factor, quot)) throw InternalError("found factor fails division");
            dense = std::move(quot);
            // Record; multiplicities are merged below.
            out.factors.emplace_back(from_dense(factor), 1);
            min_degree = d;
        } else {
            out.factors.emplace_back(from_dense(dense), 1);
            dense = {Int(1)};
        }
    }

    // Merge repeated factors; sort for a canonical report order.
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.max_exp() != b.first.max_exp()) return a.first.max_exp() < b.first.max_exp();
        return a.first.terms() < b.first.terms();
    });
    std::vector<std::pair<LaurentPoly1, int>> merged;
    for (auto& [f, m] : out.factors) {
        if (!merged.empty() && merged.back().first == f)
            merged.back().second += m;
        else
            merged.emplace_back(std::move(f), m);
    }
    out.factors = std::move(merged);

    if (!(out.product() == p)) throw InternalError("factorization fails to reconstruct input");
    return out;
}

}  // namespace conclab
