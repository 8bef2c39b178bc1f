#include "conclab/representations.hpp"

#include <cstdint>
#include <random>
#include <utility>

#include "conclab/boundary_forms.hpp"
#include "conclab/factor.hpp"

namespace conclab {

namespace {

bool is_diag01(const RatMatrix& p) {
    for (std::size_t r = 0; r < p.rows(); ++r)
        for (std::size_t c = 0; c < p.cols(); ++c) {
            if (r != c && p.at(r, c) != 0) return false;
            if (r == c && p.at(r, c) != 0 && p.at(r, c) != 1) return false;
        }
    return true;
}

std::vector<Rat> apply(const RatMatrix& g, const std::vector<Rat>& x) {
    std::vector<Rat> y(g.rows());
    for (std::size_t r = 0; r < g.rows(); ++r) {
        Rat acc = 0;
        for (std::size_t c = 0; c < g.cols(); ++c) acc += g.at(r, c) * x[c];
        y[r] = std::move(acc);
    }
    return y;
}

// Rows in echelon form with strictly increasing pivot columns.
struct Echelon {
    std::vector<std::vector<Rat>> rows;

    // Reduce v against the rows; insert the remainder if nonzero.
    bool insert(std::vector<Rat> v) {
        for (const auto& row : rows) {
            const std::size_t p = pivot(row);
            if (v[p] != 0) {
                const Rat f = v[p];
                for (std::size_t c = p; c < v.size(); ++c) v[c] -= f * row[c];
            }
        }
        const std::size_t p = pivot(v);
        if (p == v.size()) return false;
        const Rat f = v[p];
        for (std::size_t c = p; c < v.size(); ++c) v[c] /= f;
        auto it = rows.begin();
        while (it != rows.end() && pivot(*it) < p) ++it;
        rows.insert(it, std::move(v));
        return true;
    }

    static std::size_t pivot(const std::vector<Rat>& v) {
        for (std::size_t c = 0; c < v.size(); ++c)
            if (v[c] != 0) return c;
        return v.size();
    }
};

// Smallest subspace containing v and closed under the generators.
Echelon spin(const std::vector<Rat>& v, const std::vector<const RatMatrix*>& gens) {
    Echelon w;
    std::vector<std::vector<Rat>> fresh;
    if (w.insert(v)) fresh.push_back(v);
    while (!fresh.empty() && w.rows.size() < v.size()) {
        std::vector<std::vector<Rat>> next;
        for (const auto& x : fresh)
            for (const auto* g : gens) {
                auto y = apply(*g, x);
                if (w.insert(y)) next.push_back(std::move(y));
            }
        fresh = std::move(next);
    }
    return w;
}

int small_coeff(std::mt19937_64& rng) { return static_cast<int>(rng() % 7) - 3; }

RatMatrix combine(const std::vector<RatMatrix>& basis, const std::vector<int>& coeffs) {
    RatMatrix h(basis[0].rows(), basis[0].cols());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (coeffs[k] == 0) continue;
        for (std::size_t r = 0; r < h.rows(); ++r)
            for (std::size_t c = 0; c < h.cols(); ++c)
                h.at(r, c) += Rat(coeffs[k]) * basis[k].at(r, c);
    }
    return h;
}

bool intertwines(const RatMatrix& h, const Representation& rep, const Representation& to) {
    if (h * rep.action() != to.action() * h) return false;
    for (std::size_t i = 0; i < rep.components(); ++i)
        if (h * rep.projectors()[i] != to.projectors()[i] * h) return false;
    return true;
}

}  // namespace

Representation::Representation(std::vector<RatMatrix> projectors, RatMatrix action,
                               RatMatrix form)
    : dim_(action.rows()),
      projectors_(std::move(projectors)),
      action_(std::move(action)),
      form_(std::move(form)) {
    if (projectors_.empty()) throw InvalidInput("need at least one projector");
    if (!action_.is_square() || !form_.is_square() || form_.rows() != dim_)
        throw InvalidInput("action and form must be square of equal size");
    const RatMatrix id = RatMatrix::identity(dim_);
    RatMatrix sum(dim_, dim_);
    for (std::size_t i = 0; i < projectors_.size(); ++i) {
        const RatMatrix& p = projectors_[i];
        if (!p.is_square() || p.rows() != dim_) throw InvalidInput("projector shape mismatch");
        if (p * p != p) throw InvalidInput("projector is not idempotent");
        for (std::size_t j = 0; j < i; ++j)
            if (!(projectors_[j] * p).is_zero() || !(p * projectors_[j]).is_zero())
                throw InvalidInput("projectors are not orthogonal");
        sum = sum + p;
    }
    if (sum != id) throw InvalidInput("projectors do not sum to the identity");
    if (form_.transpose() != -form_) throw InvalidInput("form is not skew-symmetric");
    if (form_.det() == 0) throw InvalidInput("form is singular");
    for (const RatMatrix& p : projectors_)
        if (p.transpose() * form_ != form_ * p) throw InvalidInput("form does not respect grading");
    if (action_.transpose() * form_ + form_ * action_ != form_)
        throw InvalidInput("hermitian identity S^T phi + phi S = phi fails");
}

Representation from_seifert(const SeifertMatrix& a) {
    if (a.size() == 0) throw InvalidInput("empty Seifert matrix has no representation");
    const IntMatrix t = a.intersection_form();
    const RatMatrix tq(t);
    const auto tinv = tq.inverse();
    if (!tinv) throw InternalError("unimodular intersection form failed to invert");
    const RatMatrix s = *tinv * RatMatrix(a.matrix());
    return Representation({RatMatrix::identity(a.size())}, s, tq);
}

Representation hat(const Representation& rep, const SeifertMatrix& a) {
    if (!(rep == from_seifert(a))) throw InvalidInput("representation does not match the matrix");
    const auto ts = build_That_Shat(a);
    const std::size_t n = a.size();  // 2g
    const std::size_t dim = 4 * n;
    RatMatrix p1(dim, dim), p2(dim, dim);
    for (std::size_t k = 0; k < 2 * n; ++k) {
        p1.at(k, k) = 1;
        p2.at(2 * n + k, 2 * n + k) = 1;
    }
    return Representation({std::move(p1), std::move(p2)}, ts.shat, RatMatrix(ts.that));
}

LaurentPoly1 char_poly(const RatMatrix& s) {
    IntMatrix m(0, 0);
    if (!s.is_square() || !s.to_int_matrix(m))
        throw InvalidInput("characteristic polynomial needs a square integer action");
    const std::size_t n = m.rows();
    std::vector<Int> points, values;
    Int x = 0;
    for (std::size_t j = 0; j <= n; ++j) {
        IntMatrix shifted = m;
        for (std::size_t k = 0; k < n; ++k) shifted.at(k, k) -= x;
        points.push_back(x);
        values.push_back(shifted.det());
        x = x > 0 ? Int(-x) : Int(-x + 1);
    }
    auto p = interpolate_integer(points, values);
    if (!p) throw InternalError("characteristic polynomial interpolation failed");
    return *p;
}

CharPolyReport char_poly_simple(const Representation& rep) {
    if (rep.components() != 1) throw InvalidInput("irreducibility oracle is for m = 1 only");
    LaurentPoly1 p = char_poly(rep.action());
    const auto fac = factor_integer_poly(p);
    if (!fac) return {std::move(p), CharPolyReport::Verdict::Inconclusive};
    const bool irred =
        fac->unit_exp == 0 && fac->factors.size() == 1 && fac->factors[0].second == 1;
    return {std::move(p),
            irred ? CharPolyReport::Verdict::Irreducible : CharPolyReport::Verdict::Reducible};
}

HomSpaceBasis hom_space(const Representation& rep, const Representation& to) {
    if (rep.components() != to.components())
        throw InvalidInput("hom space needs matching gradings");
    const std::size_t nc = rep.dim(), nr = to.dim(), m = rep.components();

    // Grading mask: with 0/1-diagonal projectors on both sides, H pi_i =
    // pi_i' H forces H[r][c] = 0 unless r and c sit in the same component.
    bool diag = true;
    for (const auto& p : rep.projectors()) diag = diag && is_diag01(p);
    for (const auto& p : to.projectors()) diag = diag && is_diag01(p);

    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    if (diag) {
        auto grade = [m](const std::vector<RatMatrix>& ps, std::size_t k) {
            for (std::size_t i = 0; i < m; ++i)
                if (ps[i].at(k, k) == 1) return i;
            return m;  // unreachable: projectors partition the coordinates
        };
        for (std::size_t r = 0; r < nr; ++r)
            for (std::size_t c = 0; c < nc; ++c)
                if (grade(to.projectors(), r) == grade(rep.projectors(), c))
                    unknowns.emplace_back(r, c);
    } else {
        for (std::size_t r = 0; r < nr; ++r)
            for (std::size_t c = 0; c < nc; ++c) unknowns.emplace_back(r, c);
    }

    std::vector<std::size_t> slot(nr * nc, unknowns.size());
    for (std::size_t u = 0; u < unknowns.size(); ++u)
        slot[unknowns[u].first * nc + unknowns[u].second] = u;

    // One block of equations per constraint pair (P, P'): (H P - P' H) = 0.
    std::vector<std::pair<const RatMatrix*, const RatMatrix*>> pairs;
    if (!diag)
        for (std::size_t i = 0; i < m; ++i)
            pairs.emplace_back(&rep.projectors()[i], &to.projectors()[i]);
    pairs.emplace_back(&rep.action(), &to.action());

    RatMatrix sys(pairs.size() * nr * nc, unknowns.size());
    std::size_t row = 0;
    for (const auto& [p, pp] : pairs) {
        for (std::size_t r = 0; r < nr; ++r)
            for (std::size_t c = 0; c < nc; ++c, ++row) {
                for (std::size_t b = 0; b < nc; ++b) {
                    const std::size_t u = slot[r * nc + b];
                    if (u < unknowns.size()) sys.at(row, u) += p->at(b, c);
                }
                for (std::size_t a2 = 0; a2 < nr; ++a2) {
                    const std::size_t u = slot[a2 * nc + c];
                    if (u < unknowns.size()) sys.at(row, u) -= pp->at(r, a2);
                }
            }
    }

    const RatMatrix ns = sys.null_space();
    HomSpaceBasis out;
    for (std::size_t k = 0; k < ns.cols(); ++k) {
        RatMatrix h(nr, nc);
        for (std::size_t u = 0; u < unknowns.size(); ++u)
            h.at(unknowns[u].first, unknowns[u].second) = ns.at(u, k);
        out.basis.push_back(std::move(h));
    }
    return out;
}

IsoVerdict is_isomorphic(const Representation& rep, const Representation& to) {
    if (rep.components() != to.components())
        throw InvalidInput("isomorphism test needs matching gradings");
    if (rep.dim() != to.dim()) return {IsoVerdict::Kind::No, std::nullopt, "dimension mismatch"};

    IntMatrix si(0, 0), ti(0, 0);
    if (rep.action().to_int_matrix(si) && to.action().to_int_matrix(ti) &&
        char_poly(rep.action()) != char_poly(to.action()))
        return {IsoVerdict::Kind::No, std::nullopt, "characteristic polynomials differ"};

    const auto hom = hom_space(rep, to);
    if (hom.basis.empty()) return {IsoVerdict::Kind::No, std::nullopt, "hom space is zero"};

    auto certify = [&](RatMatrix h) -> std::optional<IsoVerdict> {
        if (h.det() == 0) return std::nullopt;
        if (!intertwines(h, rep, to)) throw InternalError("witness fails the intertwining laws");
        return IsoVerdict{IsoVerdict::Kind::Yes, std::move(h), ""};
    };

    if (rep == to) return *certify(RatMatrix::identity(rep.dim()));

    for (std::uint64_t k = 0; k < 20; ++k) {
        std::mt19937_64 rng(0xC0FFEE + k);
        std::vector<int> coeffs(hom.basis.size());
        for (auto& c : coeffs) c = small_coeff(rng);
        if (auto v = certify(combine(hom.basis, coeffs))) return *v;
    }

    if (hom.basis.size() <= 4) {
        std::vector<int> coeffs(hom.basis.size(), -2);
        while (true) {
            if (auto v = certify(combine(hom.basis, coeffs))) return *v;
            std::size_t d = 0;
            while (d < coeffs.size() && coeffs[d] == 2) coeffs[d++] = -2;
            if (d == coeffs.size()) break;
            ++coeffs[d];
        }
    }
    return {IsoVerdict::Kind::Unknown, std::nullopt, "no invertible combination found"};
}

SimplicityReport simplicity_suite(const Representation& rep) {
    SimplicityReport report;
    const std::size_t n = rep.dim();

    if (rep.action().det() == 0) report.warnings.push_back("det S = 0");
    if ((rep.action() - RatMatrix::identity(n)).det() == 0)
        report.warnings.push_back("det(S - I) = 0");

    std::vector<const RatMatrix*> gens;
    for (const auto& p : rep.projectors()) gens.push_back(&p);
    gens.push_back(&rep.action());

    report.cyclic_from_all = true;
    for (std::size_t k = 0; k < n && report.cyclic_from_all; ++k) {
        std::vector<Rat> e(n);
        e[k] = 1;
        const Echelon w = spin(e, gens);
        if (w.rows.size() < n) {
            report.cyclic_from_all = false;
            RatMatrix cert(w.rows.size(), n);
            for (std::size_t r = 0; r < w.rows.size(); ++r)
                for (std::size_t c = 0; c < n; ++c) cert.at(r, c) = w.rows[r][c];
            report.invariant_subspace = std::move(cert);
        }
    }

    const auto hom = hom_space(rep, rep);
    report.commutant_dim = hom.basis.size();
    report.commutant_division = true;
    auto probe = [&](const RatMatrix& h) {
        if (h.is_zero() || h.det() != 0) return;
        report.commutant_division = false;
        if (!report.singular_commutant) report.singular_commutant = h;
    };
    for (const auto& b : hom.basis) probe(b);
    for (std::uint64_t k = 0; k < 20; ++k) {
        std::mt19937_64 rng(0xC0FFEE + k);
        std::vector<int> coeffs(hom.basis.size());
        for (auto& c : coeffs) c = small_coeff(rng);
        probe(combine(hom.basis, coeffs));
    }

    const bool checks = report.cyclic_from_all && report.commutant_division;
    if (rep.components() == 1) {
        const auto cp = char_poly_simple(rep);
        if (cp.verdict != CharPolyReport::Verdict::Inconclusive) {
            report.oracle_irreducible = cp.verdict == CharPolyReport::Verdict::Irreducible;
            report.defect = *report.oracle_irreducible && !checks;
        }
    }
    report.simple = report.oracle_irreducible ? *report.oracle_irreducible : checks;
    return report;
}

}  // namespace conclab
