#include "conclab/ccomplex.hpp"

#include <complex>
#include <string>

#include "conclab/exact.hpp"

namespace conclab {

namespace {

GaussRatMatrix pencil_exact(const CComplexData& d, const GaussRat& w1, const GaussRat& w2) {
    const GaussRat one(Rat(1));
    const GaussRat sa = (one - w1.conj()) * (one - w2.conj());
    const GaussRat sap = (one - w1.conj()) * (one - w2);
    const GaussRat sapt = (one - w1) * (one - w2.conj());
    const GaussRat sat = (one - w1) * (one - w2);

    const std::size_t n = d.a.rows();
    GaussRatMatrix h(RatMatrix(n, n), RatMatrix(n, n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const GaussRat v = sa * GaussRat(Rat(d.a.at(r, c))) +
                               sap * GaussRat(Rat(d.aprime.at(r, c))) +
                               sapt * GaussRat(Rat(d.aprime.at(c, r))) +
                               sat * GaussRat(Rat(d.a.at(c, r)));
            h.set(r, c, v);
        }
    return h;
}

CMatrix pencil_float(const CComplexData& d, std::complex<double> w1, std::complex<double> w2) {
    const std::complex<double> sa = (1.0 - std::conj(w1)) * (1.0 - std::conj(w2));
    const std::complex<double> sap = (1.0 - std::conj(w1)) * (1.0 - w2);
    const std::complex<double> sapt = (1.0 - w1) * (1.0 - std::conj(w2));
    const std::complex<double> sat = (1.0 - w1) * (1.0 - w2);

    const std::size_t n = d.a.rows();
    CMatrix h(n, std::vector<std::complex<double>>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            h[r][c] = sa * static_cast<double>(d.a.at(r, c)) +
                      sap * static_cast<double>(d.aprime.at(r, c)) +
                      sapt * static_cast<double>(d.aprime.at(c, r)) +
                      sat * static_cast<double>(d.a.at(c, r));
        }
    return h;
}

}  // namespace

SignatureResult multivar_signature_full(const CComplexData& d, const CirclePoint& w1,
                                        const CirclePoint& w2) {
    if (w1.is_exact() && w2.is_exact())
        return hermitian_signature(pencil_exact(d, w1.exact_value(), w2.exact_value()));
    return hermitian_signature(pencil_float(d, w1.value(), w2.value()));
}

int multivar_signature(const CComplexData& d, const CirclePoint& w1, const CirclePoint& w2) {
    return multivar_signature_full(d, w1, w2).signature;
}

AlexanderModuleVerdict bing_alexander_module(const CComplexData& d) {
    const IntMatrix zero(d.a.rows(), d.a.cols());
    if (d.a == zero && d.aprime == zero) {
        LaurentPoly2 one;
        one.set(0, 0, Int(1));
        return {AlexanderModuleVerdict::Kind::TrivialFree, std::move(one)};
    }
    return {AlexanderModuleVerdict::Kind::Other, std::nullopt};
}

int murasugi_arf(int arf1, int arf2, const LaurentPoly1& diag) {
    if (arf1 < 0 || arf1 > 1 || arf2 < 0 || arf2 > 1)
        throw InvalidInput("Arf inputs must be 0 or 1");
    const Int dd = diag.derivative().derivative().eval_int(Int(1));
    if (dd % 2 != 0)
        throw InvalidInput("half second derivative is not an integer: " + dd.str() + "/2");
    const Int total = Int(arf1) + Int(arf2) + dd / 2;
    return static_cast<int>(((total % 2) + 2) % 2);
}

}  // namespace conclab
