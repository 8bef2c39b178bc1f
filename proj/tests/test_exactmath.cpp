#include <doctest.h>

#include "conclab/factor.hpp"
#include "conclab/hermitian.hpp"
#include "conclab/lattice.hpp"
#include "conclab/laurent.hpp"
#include "test_util.hpp"

using namespace conclab;

namespace {

LaurentPoly1 poly_from_coeffs(std::initializer_list<long> coeffs, std::int64_t lo = 0) {
    LaurentPoly1 p;
    std::int64_t e = lo;
    for (long c : coeffs) p.set(e++, Int(c));
    return p;
}

}  // namespace

TEST_CASE("integer matrix arithmetic and determinants") {
    IntMatrix a{{Int(1), Int(2)}, {Int(3), Int(4)}};
    CHECK(a.det() == -2);
    CHECK(a.transpose().at(0, 1) == 3);
    CHECK((a * IntMatrix::identity(2)) == a);

    // Pivot swap path: zero leading entry.
    IntMatrix b{{Int(0), Int(1)}, {Int(1), Int(0)}};
    CHECK(b.det() == -1);

    IntMatrix c{{Int(2), Int(1), Int(1)}, {Int(1), Int(3), Int(2)}, {Int(1), Int(0), Int(0)}};
    CHECK(c.det() == -1);

    CHECK(IntMatrix().det() == 1);
}

TEST_CASE("is_unimodular") {
    CHECK(is_unimodular(IntMatrix{{Int(0), Int(1)}, {Int(-1), Int(0)}}));
    CHECK_FALSE(is_unimodular(IntMatrix{{Int(2), Int(0)}, {Int(0), Int(1)}}));
    CHECK(is_unimodular(IntMatrix()));
}

TEST_CASE("congruence") {
    IntMatrix a{{Int(1), Int(0)}, {Int(0), Int(2)}};
    IntMatrix p{{Int(0), Int(1)}, {Int(1), Int(0)}};
    CHECK(congruence(p, a) == IntMatrix{{Int(2), Int(0)}, {Int(0), Int(1)}});

    IntMatrix q{{Int(1), Int(1)}, {Int(0), Int(1)}};
    IntMatrix n{{Int(0), Int(1)}, {Int(0), Int(0)}};
    CHECK(congruence(q, n) == IntMatrix{{Int(1), Int(1)}, {Int(0), Int(0)}});

    CHECK(congruence(IntMatrix::identity(2), a) == a);
    CHECK_THROWS_AS(congruence(IntMatrix{{Int(2)}}, IntMatrix{{Int(1)}}), InvalidInput);
}

TEST_CASE("det invariance under unimodular congruence") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix a = testutil::random_int_matrix(rng, 4, 4, 5);
        IntMatrix q = testutil::random_unimodular(rng, 4);
        CHECK(congruence(q, a).det() == a.det());
    }
}

TEST_CASE("rational matrix inverse and null space") {
    RatMatrix m{{Rat(2), Rat(1)}, {Rat(1), Rat(1)}};
    auto inv = m.inverse();
    REQUIRE(inv.has_value());
    CHECK((m * *inv) == RatMatrix::identity(2));

    RatMatrix sing{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK_FALSE(sing.inverse().has_value());
    RatMatrix ker = sing.null_space();
    REQUIRE(ker.cols() == 1);
    CHECK((sing * ker).is_zero());

    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 25; ++trial) {
        RatMatrix r(3, 4);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 4; ++j) r.at(i, j) = Rat(testutil::rand_range(rng, -3, 3));
        RatMatrix basis = r.null_space();
        CHECK((r * basis).is_zero());
        CHECK(basis.cols() == 4 - r.rank());
    }
}

TEST_CASE("laurent normal form") {
    // 2t^-1 - 2t: lowest exponent shifts to 0, leading coefficient positive.
    LaurentPoly1 p;
    p.set(-1, Int(2));
    p.set(1, Int(-2));
    LaurentPoly1 n = p.normalize();
    CHECK(n.coeff(0) == -2);
    CHECK(n.coeff(2) == 2);
    CHECK(n.normalize() == n);

    CHECK(LaurentPoly1().normalize().is_zero());
    CHECK(p.reciprocal().normalize() == n);

    LaurentPoly1 d = poly_from_coeffs({1, -2, 1});  // (t-1)^2
    CHECK(d.derivative() == poly_from_coeffs({-2, 2}));
    CHECK(d.eval_int(Int(3)) == 4);
}

TEST_CASE("laurent two-variable basics") {
    LaurentPoly2 p = LaurentPoly2::monomial(Int(1), 1, 0) + LaurentPoly2::monomial(Int(1), 0, 1);
    LaurentPoly1 diag = p.diagonal();
    CHECK(diag.coeff(1) == 2);
    LaurentPoly2 q = LaurentPoly2::monomial(Int(-3), -1, 2);
    LaurentPoly2 qn = q.normalize();
    CHECK(qn == LaurentPoly2::constant(Int(3)));
}

TEST_CASE("hermitian signature exact examples") {
    RatMatrix h{{Rat(-4), Rat(2)}, {Rat(2), Rat(-4)}};
    CHECK(hermitian_signature(h).signature == -2);
    CHECK(hermitian_signature(RatMatrix{{Rat(0)}}).signature == 0);
    CHECK(hermitian_signature(RatMatrix{{Rat(0)}}).zero_count == 1);
    CHECK(hermitian_signature(RatMatrix{{Rat(2)}}).signature == 1);

    // Hyperbolic plane: zero diagonal, signature 0, no radical.
    RatMatrix hyp{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    auto r = hermitian_signature(hyp);
    CHECK(r.signature == 0);
    CHECK(r.zero_count == 0);

    GaussRatMatrix bad(RatMatrix{{Rat(0), Rat(1)}, {Rat(0), Rat(0)}});
    CHECK_THROWS_AS(hermitian_signature(bad), InvalidInput);
}

TEST_CASE("hermitian signature float examples") {
    CMatrix h = {{{-4, 0}, {2, 0}}, {{2, 0}, {-4, 0}}};
    auto r = hermitian_signature(h);
    CHECK(r.signature == -2);
    CHECK_FALSE(r.exact);

    CMatrix z = {{{0, 0}}};
    CHECK(hermitian_signature(z).signature == 0);

    CMatrix complex_h = {{{0, 0}, {0, 1}}, {{0, -1}, {0, 0}}};
    CHECK(hermitian_signature(complex_h).signature == 0);

    CMatrix asym = {{{0, 0}, {1, 0}}, {{2, 0}, {0, 0}}};
    CHECK_THROWS_AS(hermitian_signature(asym), InvalidInput);
}

TEST_CASE("exact and float signatures agree on random hermitian matrices") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        GaussRatMatrix h = testutil::random_hermitian(rng, 4);
        auto exact = hermitian_signature(h);
        CMatrix f(4, std::vector<std::complex<double>>(4));
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c)
                f[r][c] = {static_cast<double>(h.re.at(r, c)), static_cast<double>(h.im.at(r, c))};
        auto approx = hermitian_signature(f);
        if (!approx.condition_warning) {
            CHECK(exact.signature == approx.signature);
            CHECK(exact.zero_count == approx.zero_count);
        }
    }
}

TEST_CASE("signature congruence invariance on random 4x4 instances") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 25; ++trial) {
        GaussRatMatrix h = testutil::random_hermitian(rng, 4);
        // Random P over the Gaussian rationals; P is invertible iff its real
        // 8x8 representation [[Re,-Im],[Im,Re]] is.
        GaussRatMatrix p(RatMatrix(4, 4), RatMatrix(4, 4));
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) {
                p.re.at(r, c) = Rat(testutil::rand_range(rng, -3, 3));
                p.im.at(r, c) = Rat(testutil::rand_range(rng, -3, 3));
            }
        RatMatrix realrep(8, 8);
        realrep.set_block(0, 0, p.re);
        realrep.set_block(0, 4, -p.im);
        realrep.set_block(4, 0, p.im);
        realrep.set_block(4, 4, p.re);
        if (realrep.det() == 0) continue;
        auto mul = [](const GaussRatMatrix& x, const GaussRatMatrix& y) {
            return GaussRatMatrix{x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
        };
        GaussRatMatrix phps = mul(mul(p, h), p.adjoint());
        REQUIRE(phps.is_hermitian());
        auto s1 = hermitian_signature(h);
        auto s2 = hermitian_signature(phps);
        CHECK(s1.signature == s2.signature);
        CHECK(s1.zero_count == s2.zero_count);
    }
}

TEST_CASE("signature additivity over direct sums") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 20; ++trial) {
        GaussRatMatrix a = testutil::random_hermitian(rng, 3);
        GaussRatMatrix b = testutil::random_hermitian(rng, 2);
        GaussRatMatrix sum(a.re.dsum(b.re), a.im.dsum(b.im));
        CHECK(hermitian_signature(sum).signature ==
              hermitian_signature(a).signature + hermitian_signature(b).signature);
    }
}

TEST_CASE("factor_integer_poly examples") {
    auto f1 = factor_integer_poly(poly_from_coeffs({1, -1, 1}));
    REQUIRE(f1.has_value());
    REQUIRE(f1->factors.size() == 1);
    CHECK(f1->factors[0].second == 1);
    CHECK(f1->factors[0].first == poly_from_coeffs({1, -1, 1}));

    auto f2 = factor_integer_poly(poly_from_coeffs({2, -5, 2}));
    REQUIRE(f2.has_value());
    REQUIRE(f2->factors.size() == 2);
    CHECK(f2->factors[0].first == poly_from_coeffs({-2, 1}));  // t-2
    CHECK(f2->factors[1].first == poly_from_coeffs({-1, 2}));  // 2t-1
    CHECK(f2->content == 1);

    auto f3 = factor_integer_poly(poly_from_coeffs({1, -3, 1}));
    REQUIRE(f3.has_value());
    CHECK(f3->factors.size() == 1);
    CHECK(f3->factors[0].first == poly_from_coeffs({1, -3, 1}));

    // Laurent input: unit exponent recorded.
    auto f4 = factor_integer_poly(poly_from_coeffs({1, -1, 1}, -1));
    REQUIRE(f4.has_value());
    CHECK(f4->unit_exp == -1);
    CHECK(f4->factors.size() == 1);

    // Repeated factors and content.
    LaurentPoly1 sq = poly_from_coeffs({-1, 1}) * poly_from_coeffs({-1, 1});
    auto f5 = factor_integer_poly(sq * LaurentPoly1::constant(Int(6)));
    REQUIRE(f5.has_value());
    CHECK(f5->content == 6);
    REQUIRE(f5->factors.size() == 1);
    CHECK(f5->factors[0].second == 2);

    CHECK_FALSE(factor_integer_poly(poly_from_coeffs({1}, 0) + LaurentPoly1::monomial(Int(1), 17)).has_value());
    CHECK_THROWS_AS(factor_integer_poly(LaurentPoly1()), InvalidInput);
}

TEST_CASE("factor product reconstructs input on random polynomials") {
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPoly1 p;
        const int deg = static_cast<int>(testutil::rand_range(rng, 1, 6));
        for (int e = 0; e < deg; ++e) p.set(e, Int(testutil::rand_range(rng, -9, 9)));
        p.set(deg, Int(testutil::rand_range(rng, 1, 9)));
        if (p.is_zero()) continue;
        auto f = factor_integer_poly(p);
        REQUIRE(f.has_value());
        CHECK(f->product() == p);
        for (const auto& [q, m] : f->factors) {
            CHECK(q.coeff(q.max_exp()) > 0);
            CHECK(m >= 1);
        }
    }
}

TEST_CASE("smith normal form") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const auto rows = static_cast<std::size_t>(testutil::rand_range(rng, 1, 4));
        const auto cols = static_cast<std::size_t>(testutil::rand_range(rng, 1, 4));
        IntMatrix a = testutil::random_int_matrix(rng, rows, cols, 6);
        SmithResult s = smith_normal_form(a);
        CHECK(s.u * a * s.v == s.d);
        CHECK(is_unimodular(s.u));
        CHECK(is_unimodular(s.v));
        for (std::size_t i = 0; i + 1 < std::min(rows, cols); ++i) {
            if (s.d.at(i, i) != 0) {
                CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
            } else {
                CHECK(s.d.at(i + 1, i + 1) == 0);
            }
        }
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (r != c) CHECK(s.d.at(r, c) == 0);
    }
}

TEST_CASE("direct summand detection and completion") {
    IntMatrix prim{{Int(2), Int(1), Int(0), Int(0)}};
    CHECK(spans_direct_summand(prim));
    auto q = complete_to_unimodular(prim);
    REQUIRE(q.has_value());
    CHECK(is_unimodular(*q));

    IntMatrix imprim{{Int(2), Int(0)}};
    CHECK_FALSE(spans_direct_summand(imprim));
    CHECK_FALSE(complete_to_unimodular(imprim).has_value());

    std::mt19937_64 rng(18);
    for (int trial = 0; trial < 25; ++trial) {
        IntMatrix u = testutil::random_unimodular(rng, 4);
        IntMatrix top = u.block(0, 0, 2, 4);
        CHECK(spans_direct_summand(top));
        auto comp = complete_to_unimodular(top);
        REQUIRE(comp.has_value());
        CHECK(is_unimodular(*comp));
        // The completion's first rows must span the same lattice: stacking the
        // two bases gives a rank-2 matrix whose row lattice is unimodular.
        IntMatrix first = comp->block(0, 0, 2, 4);
        IntMatrix stacked(4, 4);
        stacked.set_block(0, 0, top);
        stacked.set_block(2, 0, first);
        CHECK(smith_normal_form(stacked).d.block(0, 0, 2, 2) == IntMatrix::identity(2));
        CHECK(RatMatrix(stacked).rank() == 2);
    }
}

TEST_CASE("isotropic summand search") {
    IntMatrix a{{Int(0), Int(1)}, {Int(0), Int(0)}};
    auto q = find_isotropic_summand_hnf(a, 3);
    REQUIRE(q.has_value());
    IntMatrix v = q->block(0, 0, 1, 2);
    CHECK((v * a * v.transpose()).is_zero());
    CHECK(is_unimodular(*q));

    // Positive definite symmetric part: no isotropic vector exists.
    IntMatrix pd{{Int(1), Int(1)}, {Int(0), Int(1)}};
    CHECK_FALSE(find_isotropic_summand_hnf(pd, 5).has_value());
}
