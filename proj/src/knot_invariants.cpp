#include "conclab/knot_invariants.hpp"

#include <bit>
#include <cstdint>
#include <numbers>
#include <vector>

#include "conclab/lattice.hpp"

namespace conclab {

namespace {

GaussRatMatrix hermitian_form_exact(const IntMatrix& a, const GaussRat& w) {
    const GaussRat s1 = GaussRat(Rat(1)) - w;
    const GaussRat s2 = s1.conj();
    const std::size_t n = a.rows();
    RatMatrix re(n, n), im(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const Rat arc(a.at(r, c)), acr(a.at(c, r));
            re.at(r, c) = s1.re * arc + s2.re * acr;
            im.at(r, c) = s1.im * arc + s2.im * acr;
        }
    return {std::move(re), std::move(im)};
}

CMatrix hermitian_form_float(const IntMatrix& a, std::complex<double> w) {
    const std::complex<double> s1 = 1.0 - w;
    const std::complex<double> s2 = std::conj(s1);
    const std::size_t n = a.rows();
    CMatrix h(n, std::vector<std::complex<double>>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            h[r][c] = s1 * static_cast<double>(a.at(r, c)) + s2 * static_cast<double>(a.at(c, r));
    return h;
}

// Signature at the circle position u in [0, 1) (fraction of a full turn).
SignatureResult sigma_at(const SeifertMatrix& a, const Rat& u) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(u);
    return lt_signature_full(a, CirclePoint::from_angle(theta));
}

SignatureIntegral signature_integral_impl(const SeifertMatrix& a, int resolution, bool parallel) {
    if (resolution < 16) throw InvalidInput("signature_integral requires resolution >= 16");
    SignatureIntegral out;
    out.estimate = 0;
    out.error_bound = 0;
    if (a.size() == 0) return out;

    const int res = resolution;
    std::vector<int> sig(static_cast<std::size_t>(res));
    std::vector<unsigned char> warn(static_cast<std::size_t>(res), 0);
#pragma omp parallel for schedule(static) if (parallel)
    for (int j = 0; j < res; ++j) {
        const SignatureResult r = sigma_at(a, Rat(j, res));
        sig[static_cast<std::size_t>(j)] = r.signature;
        warn[static_cast<std::size_t>(j)] = r.condition_warning ? 1 : 0;
    }

    std::vector<int> jump_at;  // bracket start indices with sig[j] != sig[j+1]
    for (int j = 0; j < res; ++j)
        if (sig[static_cast<std::size_t>(j)] != sig[static_cast<std::size_t>((j + 1) % res)])
            jump_at.push_back(j);

    const int njump = static_cast<int>(jump_at.size());
    std::vector<Rat> correction(static_cast<std::size_t>(njump));
    std::vector<unsigned char> jwarn(static_cast<std::size_t>(njump), 0);
    Int jump_magnitude = 0;
#pragma omp parallel for schedule(static) if (parallel)
    for (int k = 0; k < njump; ++k) {
        const int j = jump_at[static_cast<std::size_t>(k)];
        const int slo = sig[static_cast<std::size_t>(j)];
        const int shi = sig[static_cast<std::size_t>((j + 1) % res)];
        Rat lo(j, res), hi(j + 1, res);
        for (int step = 0; step < 6; ++step) {
            const Rat mid = (lo + hi) / 2;
            const SignatureResult r = sigma_at(a, mid);
            if (r.condition_warning) jwarn[static_cast<std::size_t>(k)] = 1;
            if (r.signature == slo)
                lo = mid;
            else
                hi = mid;
        }
        // The sample value slo was assigned to the whole cell; past the
        // located jump the true value is shi.
        const Rat located = (lo + hi) / 2;
        correction[static_cast<std::size_t>(k)] = Rat(shi - slo) * (Rat(j + 1, res) - located);
    }

    Rat estimate = 0;
    for (int j = 0; j < res; ++j) estimate += Rat(sig[static_cast<std::size_t>(j)], res);
    for (const Rat& c : correction) estimate += c;
    for (const int j : jump_at)
        jump_magnitude += abs_int(Int(sig[static_cast<std::size_t>((j + 1) % res)] -
                                      sig[static_cast<std::size_t>(j)]));

    out.estimate = estimate;
    out.error_bound = Rat(jump_magnitude) / Rat(Int(64) * res);
    out.jump_count = njump;
    for (unsigned char w : warn) out.condition_warning |= (w != 0);
    for (unsigned char w : jwarn) out.condition_warning |= (w != 0);
    return out;
}

long long arf_zero_count(const IntMatrix& a, bool parallel) {
    const int n = static_cast<int>(a.rows());
    std::vector<std::uint32_t> rowmask(static_cast<std::size_t>(n), 0);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (a.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) % 2 != 0)
                rowmask[static_cast<std::size_t>(r)] |= (1u << c);

    const long long total = 1LL << n;
    long long zeros = 0;
#pragma omp parallel for schedule(static) reduction(+ : zeros) if (parallel)
    for (long long x = 0; x < total; ++x) {
        const auto xm = static_cast<std::uint32_t>(x);
        unsigned acc = 0;
        std::uint32_t rest = xm;
        while (rest != 0) {
            const int i = std::countr_zero(rest);
            acc ^= static_cast<unsigned>(std::popcount(rowmask[static_cast<std::size_t>(i)] & xm));
            rest &= rest - 1;
        }
        if ((acc & 1u) == 0) ++zeros;
    }
    return zeros;
}

int arf_impl(const SeifertMatrix& a, bool parallel) {
    const std::size_t n = a.size();
    if (n == 0) return 0;
    if (n > 24) throw InvalidInput("arf enumeration refused beyond size 24");
    const long long zeros = arf_zero_count(a.matrix(), parallel);
    const long long expected0 = (1LL << (n - 1)) + (1LL << (a.genus() - 1));
    const long long expected1 = (1LL << (n - 1)) - (1LL << (a.genus() - 1));
    if (zeros == expected0) return 0;
    if (zeros == expected1) return 1;
    throw InternalError("mod-2 Seifert form gave a singular zero count");
}

std::string int_to_string(const Int& v) { return v.str(); }

// Primitive isotropic vector of the genus-1 form q(x,y) = a x^2 + (b+c) xy
// + d y^2, if one exists; decided exactly via the discriminant.
std::optional<std::pair<Int, Int>> genus1_isotropic(const IntMatrix& m, Int& disc_out) {
    const Int a = m.at(0, 0), b = m.at(0, 1), c = m.at(1, 0), d = m.at(1, 1);
    disc_out = (b + c) * (b + c) - 4 * a * d;
    if (a == 0) return std::make_pair(Int(1), Int(0));
    if (d == 0) return std::make_pair(Int(0), Int(1));
    Int root;
    if (!perfect_square(disc_out, root)) return std::nullopt;
    Int x = -(b + c) + root, y = 2 * a;
    const Int g = boost::multiprecision::gcd(abs_int(x), abs_int(y));
    x /= g;
    y /= g;
    if (a * x * x + (b + c) * x * y + d * y * y != 0)
        throw InternalError("quadratic root failed to evaluate to zero");
    return std::make_pair(x, y);
}

void verify_certificate(const SeifertMatrix& a, const IntMatrix& q) {
    if (!is_unimodular(q)) throw InternalError("slice certificate is not unimodular");
    const IntMatrix image = congruence(q, a.matrix());
    const std::size_t g = a.genus();
    for (std::size_t r = 0; r < g; ++r)
        for (std::size_t c = 0; c < g; ++c)
            if (image.at(r, c) != 0) throw InternalError("slice certificate fails to metabolize");
}

}  // namespace

LaurentPoly1 alexander(const SeifertMatrix& a) {
    const std::size_t n = a.size();
    if (n == 0) return LaurentPoly1::constant(Int(1));
    const IntMatrix at = a.matrix().transpose();
    std::vector<Int> points, values;
    Int k = 0;
    while (points.size() < n + 1) {
        points.push_back(k);
        values.push_back((a.matrix() - scalar_mul(k, at)).det());
        k = k > 0 ? Int(-k) : Int(-k + 1);  // 0, 1, -1, 2, -2, ...
    }
    const auto p = interpolate_integer(points, values);
    if (!p || p->is_zero()) throw InternalError("Alexander determinant failed to interpolate");
    return p->normalize();
}

SignatureResult lt_signature_full(const SeifertMatrix& a, const CirclePoint& omega) {
    if (omega.is_one()) return {0, a.size(), false, true};
    if (omega.is_exact())
        return hermitian_signature(hermitian_form_exact(a.matrix(), omega.exact_value()));
    return hermitian_signature(hermitian_form_float(a.matrix(), omega.value()));
}

int lt_signature(const SeifertMatrix& a, const CirclePoint& omega) {
    return lt_signature_full(a, omega).signature;
}

SignatureIntegral signature_integral(const SeifertMatrix& a, int resolution) {
    return signature_integral_impl(a, resolution, true);
}

SignatureIntegral signature_integral_serial(const SeifertMatrix& a, int resolution) {
    return signature_integral_impl(a, resolution, false);
}

int arf(const SeifertMatrix& a) { return arf_impl(a, true); }

int arf_serial(const SeifertMatrix& a) { return arf_impl(a, false); }

FoxMilnorResult fox_milnor(const LaurentPoly1& delta) {
    if (delta.is_zero() || abs_int(delta.eval_int(Int(1))) != 1)
        throw InvalidInput("fox_milnor requires Delta(1) = +-1");
    const LaurentPoly1 norm = delta.normalize();
    const auto fact = factor_integer_poly(norm);
    if (!fact) return {FoxMilnorResult::Status::Inconclusive, std::nullopt};
    if (fact->content != 1) throw InternalError("Delta(1) = +-1 forces content 1");

    LaurentPoly1 witness = LaurentPoly1::constant(Int(1));
    std::vector<bool> used(fact->factors.size(), false);
    for (std::size_t i = 0; i < fact->factors.size(); ++i) {
        if (used[i]) continue;
        const auto& [p, mult] = fact->factors[i];
        const LaurentPoly1 partner = p.reciprocal().normalize();
        if (partner == p) {
            if (mult % 2 != 0) return {FoxMilnorResult::Status::False, std::nullopt};
            for (int k = 0; k < mult / 2; ++k) witness = witness * p;
            used[i] = true;
            continue;
        }
        std::size_t j = fact->factors.size();
        for (std::size_t t = i + 1; t < fact->factors.size(); ++t)
            if (!used[t] && fact->factors[t].first == partner) {
                j = t;
                break;
            }
        if (j == fact->factors.size() || fact->factors[j].second != mult)
            return {FoxMilnorResult::Status::False, std::nullopt};
        const LaurentPoly1& half = p.terms() < partner.terms() ? partner : p;
        for (int k = 0; k < mult; ++k) witness = witness * half;
        used[i] = used[j] = true;
    }

    if (!((witness * witness.reciprocal()).normalize() == norm))
        throw InternalError("Fox-Milnor witness fails to reconstruct Delta");
    return {FoxMilnorResult::Status::True, witness.normalize()};
}

SliceVerdict algebraically_slice(const SeifertMatrix& a, int search_bound) {
    if (search_bound < 1) throw InvalidInput("searchBound must be >= 1");
    SliceVerdict verdict;
    verdict.search_bound = search_bound;

    const std::size_t g = a.genus();
    if (g == 0) {
        verdict.status = SliceVerdict::Status::AlgebraicallySlice;
        verdict.certificate = IntMatrix();
        return verdict;
    }

    const LaurentPoly1 delta = alexander(a);
    const FoxMilnorResult fm = fox_milnor(delta);
    if (fm.status == FoxMilnorResult::Status::False) {
        verdict.status = SliceVerdict::Status::NotSlice;
        verdict.obstruction_name = "fox_milnor";
        verdict.obstruction_value = delta.to_string();
        return verdict;
    }

    if (delta.eval_int(Int(-1)) != 0) {
        const int s = lt_signature(a, CirclePoint::minus_one());
        if (s != 0) {
            verdict.status = SliceVerdict::Status::NotSlice;
            verdict.obstruction_name = "signature_at_minus_1";
            verdict.obstruction_value = std::to_string(s);
            return verdict;
        }
    }
    if (!delta.eval_gauss(GaussRat(Rat(0), Rat(1))).is_zero()) {
        const int s = lt_signature(a, CirclePoint::i());
        if (s != 0) {
            verdict.status = SliceVerdict::Status::NotSlice;
            verdict.obstruction_name = "signature_at_i";
            verdict.obstruction_value = std::to_string(s);
            return verdict;
        }
    }

    if (g == 1) {
        Int disc;
        const auto v = genus1_isotropic(a.matrix(), disc);
        if (!v) {
            verdict.status = SliceVerdict::Status::NotSlice;
            verdict.obstruction_name = "discriminant_not_square";
            verdict.obstruction_value = int_to_string(disc);
            return verdict;
        }
        IntMatrix basis(1, 2);
        basis.at(0, 0) = v->first;
        basis.at(0, 1) = v->second;
        const auto q = complete_to_unimodular(basis);
        if (!q) throw InternalError("primitive vector failed to complete");
        verify_certificate(a, *q);
        verdict.status = SliceVerdict::Status::AlgebraicallySlice;
        verdict.certificate = *q;
        return verdict;
    }

    if (const auto q = find_isotropic_summand_hnf(a.matrix(), search_bound)) {
        verify_certificate(a, *q);
        verdict.status = SliceVerdict::Status::AlgebraicallySlice;
        verdict.certificate = *q;
        return verdict;
    }
    verdict.status = SliceVerdict::Status::Inconclusive;
    return verdict;
}

}  // namespace conclab
