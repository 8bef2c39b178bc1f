#include <doctest.h>

#include "conclab/boundary_forms.hpp"
#include "conclab/json_io.hpp"
#include "conclab/knot_invariants.hpp"
#include "conclab/table.hpp"
#include "test_util.hpp"

using namespace conclab;

namespace {

SeifertMatrix mat2(long a, long b, long c, long d) {
    IntMatrix m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return SeifertMatrix(m);
}

const SeifertMatrix hopf_band = mat2(0, 1, 0, 0);
const SeifertMatrix trefoil = mat2(-1, 1, 0, -1);
const SeifertMatrix figure8 = mat2(1, 1, 0, -1);
const SeifertMatrix stevedore = mat2(1, 1, 0, -2);

IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    IntMatrix m(rows.size(), rows.begin()->size());
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (long v : row) m.at(r, c++) = v;
        ++r;
    }
    return m;
}

}  // namespace

TEST_CASE("bing double block displays") {
    const BoundaryPairMatrix b = bing_double(hopf_band);
    CHECK(b.components() == 2);
    CHECK(b.sizes() == std::vector<std::size_t>{4, 4});
    CHECK(b.block(0, 0) == from_rows({{0, 1, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 1, 0}}));
    CHECK(b.block(0, 1) == from_rows({{0, 1, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}}));
    CHECK(b.block(1, 0) == b.block(0, 1).transpose());
    CHECK(b.block(1, 1) == b.block(0, 0));

    const BoundaryPairMatrix empty = bing_double(SeifertMatrix(IntMatrix()));
    CHECK(empty.sizes() == std::vector<std::size_t>{0, 0});
}

TEST_CASE("bing double satisfies the collection invariants on random input") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const auto g = static_cast<std::size_t>(testutil::rand_range(rng, 0, 3));
        SeifertMatrix a(testutil::random_seifert(rng, g));
        // The constructor re-checks both invariants; surviving it is the test.
        const BoundaryPairMatrix b = bing_double(a);
        CHECK(b.block(0, 1) == b.block(1, 0).transpose());
        CHECK(is_unimodular(b.block(0, 0) - b.block(0, 0).transpose()));
    }
}

TEST_CASE("boundary pair validation rejects bad grids") {
    IntMatrix good = from_rows({{0, 1}, {0, 0}});
    IntMatrix asym = from_rows({{1, 1}, {0, 1}});
    CHECK_THROWS_AS(BoundaryPairMatrix({{good, asym}, {asym, good}}), InvalidInput);
    IntMatrix bad_diag = from_rows({{1, 0}, {0, 1}});
    CHECK_THROWS_AS(BoundaryPairMatrix({{bad_diag, good}, {good.transpose(), good}}),
                    InvalidInput);
}

TEST_CASE("block sum and negation") {
    const BoundaryPairMatrix b = bing_double(trefoil);
    const BoundaryPairMatrix zero = BoundaryPairMatrix::empty(2);
    CHECK(block_sum(b, zero) == b);

    const BoundaryPairMatrix double_sum = block_sum(b, bing_double(figure8));
    CHECK(double_sum.sizes() == std::vector<std::size_t>{8, 8});
    CHECK(double_sum.block(0, 0).at(4, 4) == bing_double(figure8).block(0, 0).at(0, 0));

    const BoundaryPairMatrix neg = negate(b);
    CHECK(neg.block(0, 1) == -b.block(0, 1));
    const BoundaryPairMatrix cancel = block_sum(b, neg);
    CHECK(cancel.block(0, 0).at(0, 1) == b.block(0, 0).at(0, 1));
    CHECK(cancel.block(0, 0).at(4, 5) == -b.block(0, 0).at(0, 1));
    CHECK(cancel.block(0, 0).block(0, 4, 4, 4).is_zero());

    CHECK_THROWS_AS(block_sum(b, BoundaryPairMatrix::empty(3)), InvalidInput);
}

TEST_CASE("metabolic collection testing") {
    // All-zero blocks with identity congruence.
    std::vector<std::vector<IntMatrix>> zero_grid{
        {IntMatrix(2, 2), IntMatrix(2, 2)}, {IntMatrix(2, 2), IntMatrix(2, 2)}};
    zero_grid[0][0] = from_rows({{0, 1}, {0, 0}});
    zero_grid[1][1] = from_rows({{0, 1}, {0, 0}});
    const BoundaryPairMatrix z(zero_grid);
    CHECK(is_metabolic_collection(
        z, ComponentCongruence({IntMatrix::identity(2), IntMatrix::identity(2)})));

    // The headline example: Qhat from the identity certificate.
    const IntMatrix qhat = build_Qhat(IntMatrix::identity(2));
    CHECK(is_metabolic_collection(bing_double(hopf_band), ComponentCongruence({qhat, qhat})));

    // Trefoil with the identity congruence: upper-left contains A itself.
    const IntMatrix id4 = IntMatrix::identity(4);
    CHECK_FALSE(is_metabolic_collection(bing_double(trefoil), ComponentCongruence({id4, id4})));
}

TEST_CASE("build_Qhat") {
    const IntMatrix qhat = build_Qhat(IntMatrix::identity(2));
    CHECK(qhat == from_rows({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}));

    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 15; ++trial) {
        const IntMatrix q = testutil::random_unimodular(rng, 4);
        CHECK(is_unimodular(build_Qhat(q)));
    }
    CHECK_THROWS_AS(build_Qhat(from_rows({{2, 0}, {0, 1}})), InvalidInput);
}

TEST_CASE("a slice certificate metabolizes the bing double") {
    for (const SeifertMatrix& a : {hopf_band, stevedore}) {
        const SliceVerdict v = algebraically_slice(a);
        REQUIRE(v.status == SliceVerdict::Status::AlgebraicallySlice);
        const IntMatrix qhat = build_Qhat(*v.certificate);
        CHECK(is_metabolic_collection(bing_double(a), ComponentCongruence({qhat, qhat})));
    }
}

TEST_CASE("R identity") {
    CHECK(verify_R_identity(hopf_band, hopf_band));
    CHECK(verify_R_identity(trefoil, figure8));
    CHECK(verify_R_identity(trefoil, SeifertMatrix(IntMatrix())));
    CHECK(verify_R_identity(SeifertMatrix(IntMatrix()), stevedore));

    const KnotTable table = KnotTable::bundled();
    for (const auto& x : table.entries())
        for (const auto& y : table.entries()) CHECK(verify_R_identity(x.matrix, y.matrix));

    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 10; ++trial) {
        SeifertMatrix a(testutil::random_seifert(rng, 2));
        SeifertMatrix b(testutil::random_seifert(rng, 1));
        CHECK(verify_R_identity(a, b));
    }
}

TEST_CASE("Ahat display") {
    const IntMatrix ahat = build_Ahat(hopf_band);
    CHECK(ahat.rows() == 8);
    // First block row is [0, T, T, 0].
    const IntMatrix t = hopf_band.intersection_form();
    CHECK(ahat.block(0, 2, 2, 2) == t);
    CHECK(ahat.block(0, 4, 2, 2) == t);
    CHECK(ahat.block(0, 0, 2, 2).is_zero());
    CHECK(ahat.block(0, 6, 2, 2).is_zero());
    CHECK(build_Ahat(SeifertMatrix(IntMatrix())).rows() == 0);
}

TEST_CASE("That and Shat displays") {
    const ThatShat hopf = build_That_Shat(hopf_band);
    RatMatrix s_expect{{Rat(0), Rat(0)}, {Rat(0), Rat(1)}};
    CHECK(hopf.shat.block(0, 2, 2, 2) == s_expect);

    const ThatShat tref = build_That_Shat(trefoil);
    RatMatrix s_trefoil{{Rat(0), Rat(1)}, {Rat(-1), Rat(1)}};
    CHECK(tref.shat.block(0, 2, 2, 2) == s_trefoil);
    // Upper-left quadrant of That is [[0, T], [T, T^T]].
    const IntMatrix t = trefoil.intersection_form();
    CHECK(tref.that.block(0, 2, 2, 2) == t);
    CHECK(tref.that.block(2, 0, 2, 2) == t);
    CHECK(tref.that.block(2, 2, 2, 2) == t.transpose());
    CHECK(tref.that.block(0, 0, 2, 2).is_zero());
    // Off-component quadrants vanish.
    CHECK(tref.that.block(0, 4, 4, 4).is_zero());
    CHECK(tref.that.block(4, 0, 4, 4).is_zero());

    // The pattern identity is theorem-level: exercise it on random matrices
    // of sizes 0 through 6.
    std::mt19937_64 rng(34);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = static_cast<std::size_t>(testutil::rand_range(rng, 0, 3));
        SeifertMatrix a(testutil::random_seifert(rng, g));
        CHECK_NOTHROW(build_That_Shat(a));
    }
}

TEST_CASE("bhat congruence witness") {
    for (const SeifertMatrix& a : {hopf_band, trefoil, figure8, stevedore}) {
        const auto witness = find_bhat_congruence(a);
        REQUIRE(witness.has_value());
        CHECK(verify_bhat_congruence(a, witness->first, witness->second));
    }

    // A wrong witness is rejected, not accepted.
    CHECK_FALSE(verify_bhat_congruence(trefoil, IntMatrix::identity(4), IntMatrix::identity(4)));

    std::mt19937_64 rng(35);
    for (int trial = 0; trial < 10; ++trial) {
        SeifertMatrix a(testutil::random_seifert(rng, 2));
        const auto witness = find_bhat_congruence(a);
        REQUIRE(witness.has_value());
        CHECK(verify_bhat_congruence(a, witness->first, witness->second));
    }
}

TEST_CASE("collection metabolizer search certifies slice bing doubles") {
    const auto cert = find_metabolizer(bing_double(hopf_band), 1);
    REQUIRE(cert.has_value());
    CHECK(is_metabolic_collection(bing_double(hopf_band), *cert));

    const auto cert2 = find_metabolizer(bing_double(stevedore), 2);
    REQUIRE(cert2.has_value());
    CHECK(is_metabolic_collection(bing_double(stevedore), *cert2));
}

TEST_CASE("every collection is equivalent to itself") {
    const BoundaryPairMatrix b = bing_double(hopf_band);
    const EquivalenceResult r = equivalent_in_G(b, b, 1);
    CHECK(r.equivalent);
    REQUIRE(r.certificate.has_value());
    CHECK(is_metabolic_collection(block_sum(b, negate(b)), *r.certificate));
}

TEST_CASE("boundary pair json round trip") {
    const BoundaryPairMatrix b = bing_double(trefoil);
    const nlohmann::json j = to_json(b);
    CHECK(j["m"] == 2);
    CHECK(j["sizes"] == nlohmann::json::array({4, 4}));
    CHECK(boundary_pair_from_json(j) == b);

    const IntMatrix qhat = build_Qhat(IntMatrix::identity(2));
    const ComponentCongruence c({qhat, qhat});
    const nlohmann::json cj = to_json(c);
    CHECK(cj["kind"] == "component_congruence");
    const ComponentCongruence back = component_congruence_from_json(cj);
    CHECK(back.q.size() == 2);
    CHECK(back.q[0] == qhat);

    nlohmann::json corrupt = j;
    corrupt["sizes"][0] = 6;
    CHECK_THROWS_AS(boundary_pair_from_json(corrupt), InvalidInput);
}
