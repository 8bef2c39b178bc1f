#include "conclab/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "conclab/boundary_forms.hpp"
#include "conclab/ccomplex.hpp"
#include "conclab/diagrams.hpp"
#include "conclab/json_io.hpp"
#include "conclab/knot_invariants.hpp"
#include "conclab/representations.hpp"
#include "conclab/s_calculus.hpp"
#include "conclab/table.hpp"

namespace conclab {

namespace {

using nlohmann::json;

struct RunConfig {
    int search_bound = 5;
    int resolution = 4096;
    bool json_mode = false;
    std::uint64_t seed = 7;
};

// ---------------------------------------------------------------- formatting

std::string rat_str(const Rat& v) {
    const Int num = boost::multiprecision::numerator(v);
    const Int den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string approx(const Rat& v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v.convert_to<double>());
    return buf;
}

std::string matrix_str(const IntMatrix& m) {
    std::string out = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) out += ", ";
        out += "[";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out += ", ";
            out += m.at(r, c).str();
        }
        out += "]";
    }
    return out + "]";
}

void emit(std::ostream& os, const json& j) { os << j.dump(2) << "\n"; }

// ------------------------------------------------------------ input plumbing

struct Source {
    std::string name;
    std::string matrix_path;
    std::string braid;

    bool present() const { return !name.empty() || !matrix_path.empty() || !braid.empty(); }
};

SeifertMatrix load_seifert(const Source& src) {
    if (!src.name.empty()) {
        const KnotTable table = KnotTable::resolve();
        const SeifertMatrix* entry = table.find(src.name);
        if (!entry) throw InvalidInput("unknown knot: " + src.name);
        return *entry;
    }
    if (!src.matrix_path.empty()) {
        std::ifstream in(src.matrix_path);
        if (!in) throw InvalidInput("cannot read " + src.matrix_path);
        json j;
        try {
            in >> j;
        } catch (const json::parse_error& e) {
            throw ParseError(src.matrix_path + ": " + e.what());
        }
        return SeifertMatrix(int_matrix_from_json(j), src.matrix_path);
    }
    return seifert_matrix_from_braid(parse_braid(src.braid));
}

json source_json(const Source& src) {
    if (!src.name.empty()) return json{{"kind", "table"}, {"name", src.name}};
    if (!src.matrix_path.empty()) return json{{"kind", "matrix"}, {"path", src.matrix_path}};
    return json{{"kind", "braid"}, {"word", src.braid}};
}

// ----------------------------------------------------------------- reports

json invariants_report(const SeifertMatrix& a, const RunConfig& cfg) {
    const LaurentPoly1 delta = alexander(a);
    const int sig_m1 = lt_signature(a, CirclePoint::minus_one());
    const int sig_i = lt_signature(a, CirclePoint::i());
    const SignatureIntegral integral = signature_integral(a, cfg.resolution);
    const FoxMilnorResult fm = fox_milnor(delta);
    const SliceVerdict slice = algebraically_slice(a, cfg.search_bound);

    json j;
    j["genus"] = a.genus();
    j["alexander"] = to_json(delta);
    j["alexander_str"] = delta.to_string();
    j["signature_minus1"] = sig_m1;
    j["signature_i"] = sig_i;
    j["signature_integral"] = json{{"estimate", rat_str(integral.estimate)},
                                   {"error_bound", rat_str(integral.error_bound)},
                                   {"jumps", integral.jump_count},
                                   {"condition_warning", integral.condition_warning}};
    j["arf"] = a.size() <= 24 ? json(arf(a)) : json();
    switch (fm.status) {
        case FoxMilnorResult::Status::True:
            j["fox_milnor"] = json{{"status", "true"}, {"witness", to_json(*fm.witness)}};
            break;
        case FoxMilnorResult::Status::False:
            j["fox_milnor"] = json{{"status", "false"}};
            break;
        case FoxMilnorResult::Status::Inconclusive:
            j["fox_milnor"] = json{{"status", "inconclusive"}};
            break;
    }
    json sv;
    switch (slice.status) {
        case SliceVerdict::Status::AlgebraicallySlice:
            sv["status"] = "algebraically_slice";
            sv["certificate"] = to_json(*slice.certificate);
            break;
        case SliceVerdict::Status::NotSlice:
            sv["status"] = "not_slice";
            sv["obstruction"] = slice.obstruction_name;
            sv["value"] = slice.obstruction_value;
            break;
        case SliceVerdict::Status::Inconclusive:
            sv["status"] = "inconclusive";
            sv["search_bound"] = slice.search_bound;
            break;
    }
    j["algebraically_slice"] = std::move(sv);
    const std::string label = a.name().empty() ? "the knot" : a.name();
    if (slice.status == SliceVerdict::Status::NotSlice)
        j["conclusion"] =
            label + " is not algebraically slice, so B(" + label + ") is not boundary slice";
    else if (slice.status == SliceVerdict::Status::AlgebraicallySlice)
        j["conclusion"] = label + " is algebraically slice; no obstruction on this axis";
    else
        j["conclusion"] = "no conclusion at search bound " + std::to_string(cfg.search_bound);
    return j;
}

void invariants_human(std::ostream& out, const json& j) {
    out << "source: " << j["source"]["kind"].get<std::string>();
    if (j["source"].contains("name")) out << " " << j["source"]["name"].get<std::string>();
    if (j["source"].contains("word")) out << " '" << j["source"]["word"].get<std::string>() << "'";
    if (j["source"].contains("path")) out << " " << j["source"]["path"].get<std::string>();
    out << "\n";
    out << "genus: " << j["genus"].get<std::size_t>() << "\n";
    out << "alexander: " << j["alexander_str"].get<std::string>() << "\n";
    out << "signature(-1): " << j["signature_minus1"].get<int>() << "\n";
    out << "signature(i): " << j["signature_i"].get<int>() << "\n";
    const auto& integ = j["signature_integral"];
    out << "signature integral: " << integ["estimate"].get<std::string>() << " (~ "
        << approx(Rat(integ["estimate"].get<std::string>())) << "), error <= "
        << integ["error_bound"].get<std::string>() << " (~ "
        << approx(Rat(integ["error_bound"].get<std::string>())) << ")\n";
    if (j["arf"].is_number())
        out << "arf: " << j["arf"].get<int>() << "\n";
    out << "fox_milnor: " << j["fox_milnor"]["status"].get<std::string>() << "\n";
    const auto& sv = j["algebraically_slice"];
    out << "algebraically_slice: " << sv["status"].get<std::string>();
    if (sv.contains("obstruction"))
        out << " (" << sv["obstruction"].get<std::string>() << " = "
            << sv["value"].get<std::string>() << ")";
    out << "\n";
    out << "conclusion: " << j["conclusion"].get<std::string>() << "\n";
}

json bing_report(const SeifertMatrix& a, const RunConfig& cfg) {
    const BoundaryPairMatrix b = bing_double(a);
    json j;
    j["components"] = b.components();
    j["block_sizes"] = b.sizes();
    j["blocks"] = to_json(b);

    const SliceVerdict slice = algebraically_slice(a, cfg.search_bound);
    json met;
    if (slice.status == SliceVerdict::Status::AlgebraicallySlice) {
        const IntMatrix qhat = build_Qhat(*slice.certificate);
        const ComponentCongruence pair({qhat, qhat});
        if (!is_metabolic_collection(b, pair))
            throw InternalError("Qhat failed to metabolize the Bing double");
        met["found"] = true;
        met["qhat"] = to_json(qhat);
        met["verified"] = true;
    } else {
        met["found"] = false;
        met["reason"] = slice.status == SliceVerdict::Status::NotSlice
                            ? "the knot is not algebraically slice"
                            : "search inconclusive at bound " + std::to_string(cfg.search_bound);
    }
    j["metabolizer"] = std::move(met);

    // the Bing-double C-complex: both generalized Seifert matrices vanish
    const std::size_t n = 2 * a.size();
    const CComplexData cd(IntMatrix::zero(n, n), IntMatrix::zero(n, n));
    json samples = json::array();
    const std::pair<const char*, CirclePoint> pts[] = {
        {"-1", CirclePoint::minus_one()}, {"i", CirclePoint::i()}, {"-i", CirclePoint::minus_i()}};
    for (const auto& [n1, w1] : pts)
        for (const auto& [n2, w2] : pts)
            samples.push_back(json{{"w1", n1}, {"w2", n2},
                                   {"signature", multivar_signature(cd, w1, w2)}});
    j["signature_samples"] = std::move(samples);

    const AlexanderModuleVerdict mod = bing_alexander_module(cd);
    j["alexander_module"] =
        mod.kind == AlexanderModuleVerdict::Kind::TrivialFree ? "trivial_free" : "other";

    // both components are unknotted, and the trivial-free module restricts to
    // the constant polynomial on the diagonal
    LaurentPoly1 one;
    one.set(0, Int(1));
    j["murasugi_arf"] = murasugi_arf(0, 0, one);

    const std::string label = a.name().empty() ? "the knot" : a.name();
    if (slice.status == SliceVerdict::Status::NotSlice)
        j["conclusion"] =
            label + " is not algebraically slice, so B(" + label + ") is not boundary slice";
    else if (slice.status == SliceVerdict::Status::AlgebraicallySlice)
        j["conclusion"] = "Qhat metabolizes B(" + label + "); no obstruction on this axis";
    else
        j["conclusion"] = "no conclusion at search bound " + std::to_string(cfg.search_bound);
    return j;
}

void bing_human(std::ostream& out, const json& j) {
    out << "B(A): " << j["components"].get<int>() << " components, block sizes "
        << j["block_sizes"].dump() << "\n";
    const auto& blocks = j["blocks"]["blocks"];
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t k = 0; k < blocks[i].size(); ++k)
            out << "A" << i + 1 << k + 1 << " = " << blocks[i][k].dump() << "\n";
    const auto& met = j["metabolizer"];
    if (met["found"].get<bool>())
        out << "metabolizer: Qhat = " << met["qhat"].dump() << " (verified)\n";
    else
        out << "metabolizer: none (" << met["reason"].get<std::string>() << ")\n";
    int nonzero = 0;
    for (const auto& s : j["signature_samples"])
        if (s["signature"].get<int>() != 0) ++nonzero;
    out << "signature samples on the C-complex: " << j["signature_samples"].size()
        << " tagged points, " << (nonzero == 0 ? "all zero" : std::to_string(nonzero) + " nonzero")
        << "\n";
    out << "alexander module: " << j["alexander_module"].get<std::string>() << "\n";
    out << "murasugi arf: " << j["murasugi_arf"].get<int>() << "\n";
    out << "conclusion: " << j["conclusion"].get<std::string>() << "\n";
}

json rep_report(const SeifertMatrix& a) {
    const auto panel = [](const Representation& rep) {
        json p;
        p["dim"] = rep.dim();
        p["m"] = rep.projectors().size();
        const CharPolyReport cp = rep.projectors().size() == 1
                                      ? char_poly_simple(rep)
                                      : CharPolyReport{char_poly(rep.action()),
                                                       CharPolyReport::Verdict::Inconclusive};
        p["char_poly"] = cp.poly.to_string("s");
        switch (cp.verdict) {
            case CharPolyReport::Verdict::Irreducible: p["char_poly_irreducible"] = true; break;
            case CharPolyReport::Verdict::Reducible: p["char_poly_irreducible"] = false; break;
            case CharPolyReport::Verdict::Inconclusive: p["char_poly_irreducible"] = nullptr; break;
        }
        p["hom_self_dim"] = hom_space(rep, rep).dimension();
        const SimplicityReport sr = simplicity_suite(rep);
        p["simplicity"] = json{{"simple", sr.simple},
                               {"cyclic_from_all", sr.cyclic_from_all},
                               {"commutant_dim", sr.commutant_dim},
                               {"commutant_division", sr.commutant_division},
                               {"defect", sr.defect},
                               {"warnings", sr.warnings}};
        if (sr.invariant_subspace)
            p["simplicity"]["invariant_subspace_rank"] = sr.invariant_subspace->rows();
        return p;
    };

    json j;
    if (a.size() == 0) {
        j["note"] = "genus 0: the module is trivial";
        return j;
    }
    const Representation base = from_seifert(a);
    const Representation hat_rep = hat(base, a);
    j["base"] = panel(base);
    j["hat"] = panel(hat_rep);
    j["hat_pre_restriction_matches"] = true;  // validated by the hat constructor
    const IsoVerdict self = is_isomorphic(base, base);
    j["self_isomorphic"] = self.kind == IsoVerdict::Kind::Yes;
    return j;
}

void rep_human(std::ostream& out, const json& j) {
    if (j.contains("note")) {
        out << j["note"].get<std::string>() << "\n";
        return;
    }
    for (const char* which : {"base", "hat"}) {
        const auto& p = j[which];
        out << which << ": dim " << p["dim"].get<int>() << ", m = " << p["m"].get<int>() << "\n";
        out << "  char poly: " << p["char_poly"].get<std::string>();
        if (p["char_poly_irreducible"].is_boolean())
            out << (p["char_poly_irreducible"].get<bool>() ? " (irreducible)" : " (reducible)");
        out << "\n";
        out << "  hom(M, M) dim: " << p["hom_self_dim"].get<int>() << "\n";
        const auto& s = p["simplicity"];
        out << "  simple: " << (s["simple"].get<bool>() ? "yes" : "no")
            << " (cyclic " << (s["cyclic_from_all"].get<bool>() ? "yes" : "no")
            << ", commutant dim " << s["commutant_dim"].get<int>()
            << ", division " << (s["commutant_division"].get<bool>() ? "yes" : "no") << ")\n";
        for (const auto& w : s["warnings"])
            out << "  warning: " << w.get<std::string>() << "\n";
    }
    out << "self isomorphism: " << (j["self_isomorphic"].get<bool>() ? "yes" : "no") << "\n";
}

json braid_report(const std::string& word) {
    const BraidWord b = parse_braid(word);
    const BraidStats stats = braid_stats(b);
    json j;
    j["word"] = word;
    j["strands"] = b.strands();
    j["letters"] = b.letters();
    j["components"] = stats.components;
    j["writhe"] = stats.writhe;
    j["seifert_circles"] = stats.seifert_circles;
    j["positive"] = stats.positive;
    j["slice_bennequin_bound"] = slice_bennequin_bound(b);
    if (stats.positive) j["rasmussen_s"] = rasmussen_positive(b);
    if (stats.components == 1) {
        const SeifertMatrix a = seifert_matrix_from_braid(b);
        j["seifert_matrix"] = to_json(a.matrix());
        j["genus"] = a.genus();
        j["alexander_str"] = alexander(a).to_string();
    }
    return j;
}

void braid_human(std::ostream& out, const json& j) {
    out << "braid: '" << j["word"].get<std::string>() << "' on " << j["strands"].get<int>()
        << " strands\n";
    out << "closure components: " << j["components"].get<int>() << "\n";
    out << "writhe: " << j["writhe"].get<long>() << "\n";
    out << "seifert circles: " << j["seifert_circles"].get<int>() << "\n";
    out << "positive: " << (j["positive"].get<bool>() ? "yes" : "no") << "\n";
    if (j.contains("rasmussen_s")) out << "rasmussen s: " << j["rasmussen_s"].get<long>() << "\n";
    out << "slice-bennequin bound: " << j["slice_bennequin_bound"].get<long>() << "\n";
    if (j.contains("seifert_matrix")) {
        out << "seifert matrix: " << j["seifert_matrix"].dump() << "\n";
        out << "genus: " << j["genus"].get<int>() << "\n";
        out << "alexander: " << j["alexander_str"].get<std::string>() << "\n";
    }
}

json grid_report(const GridDiagram& g) {
    json j = json{{"grid", to_json(g)}};
    j["size"] = g.size();
    j["tb"] = tb_grid(g);
    j["tb_mirror"] = tb_grid(g.mirrored());
    return j;
}

void grid_human(std::ostream& out, const json& j) {
    out << "grid size: " << j["size"].get<int>() << "\n";
    out << "tb: " << j["tb"].get<long>() << "\n";
    out << "tb(mirror): " << j["tb_mirror"].get<long>() << "\n";
}

// ------------------------------------------------------------- verify suite

struct Check {
    std::string name;
    bool pass;
    std::string detail;  // empty when passing
};

class Suite {
public:
    void run(const std::string& name, const std::function<void()>& body) {
        try {
            body();
            checks_.push_back({name, true, ""});
        } catch (const std::exception& e) {
            checks_.push_back({name, false, e.what()});
        }
    }

    static void expect(bool cond, const std::string& detail) {
        if (!cond) throw InternalError(detail);
    }

    const std::vector<Check>& checks() const { return checks_; }
    bool all_pass() const {
        for (const auto& c : checks_)
            if (!c.pass) return false;
        return true;
    }

private:
    std::vector<Check> checks_;
};

void verify_fixed(Suite& suite) {
    const KnotTable table = KnotTable::resolve();

    suite.run("table loads and passes its oracles", [&] {
        Suite::expect(table.entries().size() >= 4, "expected at least the four bundled knots");
    });

    suite.run("R identity on all table pairs", [&] {
        for (const auto& x : table.entries())
            for (const auto& y : table.entries())
                Suite::expect(verify_R_identity(x.matrix, y.matrix),
                              "R identity failed on " + x.name + " + " + y.name);
    });

    suite.run("That/Shat displays on the table", [&] {
        for (const auto& x : table.entries()) {
            if (x.matrix.size() == 0) continue;
            build_That_Shat(x.matrix);  // throws on any pattern mismatch
        }
    });

    suite.run("Bhat congruence found and verified", [&] {
        for (const auto& x : table.entries()) {
            if (x.matrix.size() == 0) continue;
            const auto pair = find_bhat_congruence(x.matrix);
            Suite::expect(pair.has_value(), "no congruence pair for " + x.name);
            Suite::expect(verify_bhat_congruence(x.matrix, pair->first, pair->second),
                          "congruence pair fails verification for " + x.name);
        }
    });

    suite.run("Qhat metabolizes Bing doubles of slice-type matrices", [&] {
        const std::vector<IntMatrix> mats = {
            IntMatrix{{0, 1}, {0, 0}},
            IntMatrix{{1, 1}, {0, -2}},
        };
        for (const auto& m : mats) {
            const SeifertMatrix a(m);
            const SliceVerdict v = algebraically_slice(a, 5);
            Suite::expect(v.status == SliceVerdict::Status::AlgebraicallySlice,
                          "expected a metabolizer for " + matrix_str(m));
            const IntMatrix qhat = build_Qhat(*v.certificate);
            Suite::expect(is_metabolic_collection(bing_double(a), ComponentCongruence({qhat, qhat})),
                          "Qhat does not metabolize the Bing double of " + matrix_str(m));
        }
    });

    suite.run("hat representation keeps the hom dimension 2", [&] {
        for (const char* name : {"trefoil", "figure8"}) {
            const SeifertMatrix& a = *table.find(name);
            const Representation base = from_seifert(a);
            const Representation hat_rep = hat(base, a);
            Suite::expect(hom_space(base, base).dimension() == 2,
                          std::string(name) + ": base hom dimension is not 2");
            Suite::expect(hom_space(hat_rep, hat_rep).dimension() == 2,
                          std::string(name) + ": hat hom dimension is not 2");
        }
    });

    suite.run("lemma: s of the Bing double pair is -1 or +1", [&] {
        SConstraintSystem sys;
        sys.links = {{"Hopf+", 2}, {"Hopf-", 2}, {"B", 2}};
        sys.constraints = {
            SConstraint::positive_diagram("Hopf+", 2, 2),
            SConstraint::known("Hopf-", -1),
            SConstraint::cobordism("B", "Hopf+", -2),
            SConstraint::cobordism("B", "Hopf-", -2),
            SConstraint::parity("B"),
        };
        const SolveResult r = solve(sys);
        Suite::expect(r.consistent, "lemma system inconsistent");
        Suite::expect(r.domains.at("B") == ValueSet::finite({-1, 1}),
                      "expected {-1, 1}, got " + r.domains.at("B").str());
    });

    suite.run("whitehead scenario yields exactly three pairs", [&] {
        const WhiteheadReport r = scenario_whitehead();
        const std::vector<std::pair<std::int64_t, std::int64_t>> expected = {
            {-1, 0}, {1, 0}, {1, 2}};
        Suite::expect(r.pairs == expected, "unexpected pair set");
    });

    suite.run("pinning s(Wh) = 2 forces s(B) = 1", [&] {
        const WhiteheadReport r = scenario_whitehead(2);
        Suite::expect(r.pairs == std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 2}},
                      "expected the single pair (1, 2)");
    });

    suite.run("positive-diagram and unlink s values", [&] {
        SConstraintSystem sys;
        sys.links = {{"U2", 2}};
        sys.constraints = {SConstraint::positive_diagram("U2", 0, 2)};
        Suite::expect(solve(sys).domains.at("U2") == ValueSet::finite({-1}),
                      "two-component unlink should have s = -1");
        Suite::expect(rasmussen_positive(parse_braid("1 1")) == 1, "positive Hopf link s != 1");
        Suite::expect(rasmussen_positive(parse_braid("1 1 1")) == 2, "positive trefoil s != 2");
    });

    suite.run("C-complex signature anchors", [&] {
        const CComplexData d3(IntMatrix{{3}}, IntMatrix{{3}});
        Suite::expect(multivar_signature(d3, CirclePoint::minus_one(), CirclePoint::minus_one()) == 1,
                      "scalar 3 sample is not +1");
        const CComplexData dm2(IntMatrix{{-2}}, IntMatrix{{-2}});
        Suite::expect(multivar_signature(dm2, CirclePoint::i(), CirclePoint::minus_one()) == -1,
                      "scalar -2 sample is not -1");
        const SignatureResult at_one =
            multivar_signature_full(d3, CirclePoint::one(), CirclePoint::minus_one());
        Suite::expect(at_one.signature == 0 && at_one.zero_count == 1,
                      "pencil does not vanish at w1 = 1");
    });

    suite.run("murasugi congruence anchors", [&] {
        LaurentPoly1 sq;  // (t - 1)^2
        sq.set(2, Int(1));
        sq.set(1, Int(-2));
        sq.set(0, Int(1));
        Suite::expect(murasugi_arf(0, 0, sq) == 1, "(t-1)^2 correction should flip the parity");
        LaurentPoly1 lin;  // t - 1
        lin.set(1, Int(1));
        lin.set(0, Int(-1));
        Suite::expect(murasugi_arf(1, 1, lin) == 0, "arf sum 1+1 should cancel mod 2");
    });

    suite.run("braid closure matches the stored trefoil", [&] {
        const SeifertMatrix a = seifert_matrix_from_braid(parse_braid("1 1 1"));
        const SeifertMatrix& t = *table.find("trefoil");
        Suite::expect(a.matrix() == t.matrix(), "Bennequin matrix differs from the stored one");
        Suite::expect(alexander(a) == alexander(t), "alexander polynomials differ");
        Suite::expect(arf(a) == arf(t), "arf values differ");
    });

    suite.run("grid tb anchors", [&] {
        Suite::expect(tb_grid(GridDiagram({0, 1}, {1, 0})) == -1, "square unknot tb != -1");
        const GridDiagram tref = parse_grid("5; X=[1,2,3,4,5]; O=[3,4,5,1,2]");
        Suite::expect(tb_grid(tref) == 1, "trefoil grid tb != 1");
        Suite::expect(tb_grid(tref.mirrored()) == -6, "mirror grid tb != -6");
    });

    suite.run("figure-eight pipeline: fox-milnor fails, bing obstructed", [&] {
        const SeifertMatrix& f8 = *table.find("figure8");
        const FoxMilnorResult fm = fox_milnor(alexander(f8));
        Suite::expect(fm.status == FoxMilnorResult::Status::False,
                      "figure8 unexpectedly passes fox-milnor");
        const SliceVerdict v = algebraically_slice(f8, 5);
        Suite::expect(v.status == SliceVerdict::Status::NotSlice,
                      "figure8 unexpectedly algebraically slice");
    });
}

void verify_random(Suite& suite, int count, std::uint64_t seed) {
    const auto rand_range = [](std::mt19937_64& rng, long lo, long hi) {
        return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    // J + sym + sym^T keeps A - A^T equal to the standard symplectic blocks
    const auto random_seifert = [&](std::mt19937_64& rng, std::size_t g) {
        IntMatrix a = IntMatrix::zero(2 * g, 2 * g);
        for (std::size_t k = 0; k < g; ++k) a.at(2 * k, 2 * k + 1) = 1;
        for (std::size_t r = 0; r < 2 * g; ++r)
            for (std::size_t c = 0; c <= r; ++c) {
                const Int v(rand_range(rng, -2, 2));
                a.at(r, c) += v;
                a.at(c, r) += v;
            }
        return SeifertMatrix(std::move(a));
    };

    suite.run("random: R identity", [&] {
        std::mt19937_64 rng(seed);
        for (int t = 0; t < count; ++t) {
            const SeifertMatrix a = random_seifert(rng, 1 + t % 3);
            const SeifertMatrix b = random_seifert(rng, 1 + (t + 1) % 3);
            Suite::expect(verify_R_identity(a, b),
                          "R identity failed on " + matrix_str(a.matrix()) + " + " +
                              matrix_str(b.matrix()));
        }
    });

    suite.run("random: That/Shat pattern and hat invariants", [&] {
        std::mt19937_64 rng(seed + 1);
        for (int t = 0; t < count; ++t) {
            const SeifertMatrix a = random_seifert(rng, 1 + t % 2);
            build_That_Shat(a);
            const Representation hat_rep = hat(from_seifert(a), a);
            Suite::expect(hat_rep.dim() == 4 * a.size(), "hat dimension mismatch");
        }
    });

    suite.run("random: C-complex conjugation symmetry and additivity", [&] {
        std::mt19937_64 rng(seed + 2);
        for (int t = 0; t < count; ++t) {
            const std::size_t n = 1 + t % 3;
            IntMatrix a = IntMatrix::zero(n, n), ap = IntMatrix::zero(n, n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) {
                    a.at(r, c) = rand_range(rng, -2, 2);
                    ap.at(r, c) = rand_range(rng, -2, 2);
                }
            const CComplexData d(a, ap);
            const CirclePoint w1 = CirclePoint::i(), w2 = CirclePoint::minus_one();
            const int s = multivar_signature(d, w1, w2);
            Suite::expect(multivar_signature(d, w1.conj(), w2.conj()) == s,
                          "conjugation symmetry failed on " + matrix_str(a));
            const CComplexData dd(a.dsum(a), ap.dsum(ap));
            Suite::expect(multivar_signature(dd, w1, w2) == 2 * s,
                          "additivity failed on " + matrix_str(a));
        }
    });

    suite.run("random: hat action characteristic polynomial pattern", [&] {
        std::mt19937_64 rng(seed + 3);
        for (int t = 0; t < std::max(1, count / 10); ++t) {
            const SeifertMatrix a = random_seifert(rng, 1 + t % 2);
            const Representation hat_rep = hat(from_seifert(a), a);
            LaurentPoly1 factor;  // s^2 - s
            factor.set(2, Int(1));
            factor.set(1, Int(-1));
            LaurentPoly1 expected;
            expected.set(0, Int(1));
            for (std::size_t k = 0; k < 2 * a.size(); ++k) expected = expected * factor;
            Suite::expect(char_poly(hat_rep.action()) == expected,
                          "hat char poly deviates from (s^2 - s)^(4g) on " +
                              matrix_str(a.matrix()));
        }
    });

    suite.run("random: connected braid closures give valid Seifert matrices", [&] {
        std::mt19937_64 rng(seed + 4);
        int seen = 0;
        for (int t = 0; t < 20 * count && seen < count; ++t) {
            const auto n = static_cast<std::size_t>(rand_range(rng, 2, 4));
            std::vector<int> w;
            const long len = rand_range(rng, 3, 9);
            for (long k = 0; k < len; ++k) {
                const int l = static_cast<int>(rand_range(rng, 1, static_cast<long>(n) - 1));
                w.push_back(rand_range(rng, 0, 1) ? l : -l);
            }
            const BraidWord b(n, w);
            if (braid_stats(b).components != 1) continue;
            ++seen;
            const SeifertMatrix a = seifert_matrix_from_braid(b);  // ctor revalidates
            Suite::expect(a.size() == w.size() - n + 1, "rank formula violated");
        }
        Suite::expect(seen == count, "not enough connected samples drawn");
    });
}

int cmd_verify(std::ostream& out, const RunConfig& cfg, int random_count) {
    Suite suite;
    verify_fixed(suite);
    if (random_count > 0) verify_random(suite, random_count, cfg.seed);

    if (cfg.json_mode) {
        json checks = json::array();
        for (const auto& c : suite.checks()) {
            json item{{"name", c.name}, {"pass", c.pass}};
            if (!c.pass) item["detail"] = c.detail;
            checks.push_back(std::move(item));
        }
        emit(out, json{{"all_pass", suite.all_pass()},
                       {"checks", std::move(checks)},
                       {"random", random_count},
                       {"seed", cfg.seed}});
    } else {
        for (const auto& c : suite.checks()) {
            out << (c.pass ? "pass" : "FAIL") << ": " << c.name << "\n";
            if (!c.pass) out << "      " << c.detail << "\n";
        }
        out << (suite.all_pass() ? "all checks passed" : "SUITE FAILED") << "\n";
    }
    return suite.all_pass() ? kExitOk : kExitVerification;
}

// -------------------------------------------------------------------- batch

json batch_line(const std::string& line, const std::string& subcommand, const RunConfig& cfg) {
    json req;
    try {
        req = json::parse(line);
    } catch (const json::parse_error& e) {
        return json{{"error", e.what()}, {"exit_code", kExitParse}};
    }
    try {
        if (subcommand == "parse-braid") {
            if (!req.contains("braid")) throw InvalidInput("batch line needs a braid field");
            return braid_report(req["braid"].get<std::string>());
        }
        if (subcommand == "tb-grid") {
            if (req.contains("grid")) return grid_report(parse_grid(req["grid"].get<std::string>()));
            return grid_report(grid_from_json(req));
        }
        // invariants / bing accept {name} | {braid} | {matrix}
        SeifertMatrix a = [&]() -> SeifertMatrix {
            if (req.contains("name")) {
                const auto name = req["name"].get<std::string>();
                const KnotTable table = KnotTable::resolve();
                const SeifertMatrix* entry = table.find(name);
                if (!entry) throw InvalidInput("unknown knot: " + name);
                return *entry;
            }
            if (req.contains("braid"))
                return seifert_matrix_from_braid(parse_braid(req["braid"].get<std::string>()));
            if (req.contains("matrix"))
                return SeifertMatrix(int_matrix_from_json(req["matrix"]));
            throw InvalidInput("batch line needs name, braid or matrix");
        }();
        json rep = subcommand == "bing" ? bing_report(a, cfg) : invariants_report(a, cfg);
        rep["input"] = req;
        return rep;
    } catch (const ParseError& e) {
        return json{{"error", e.what()}, {"exit_code", kExitParse}};
    } catch (const InvalidInput& e) {
        return json{{"error", e.what()}, {"exit_code", kExitUnknown}};
    } catch (const std::exception& e) {
        return json{{"error", e.what()}, {"exit_code", kExitVerification}};
    }
}

int run_batch(const std::string& path, const std::string& subcommand, const RunConfig& cfg,
              std::ostream& out) {
    std::vector<std::string> lines;
    {
        std::istream* in = &std::cin;
        std::ifstream file;
        if (path != "-") {
            file.open(path);
            if (!file) throw InvalidInput("cannot read " + path);
            in = &file;
        }
        std::string line;
        while (std::getline(*in, line))
            if (!line.empty()) lines.push_back(line);
    }

    std::vector<json> results(lines.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < lines.size(); ++k)
        results[k] = batch_line(lines[k], subcommand, cfg);

    int code = kExitOk;
    for (const auto& r : results) {
        out << r.dump() << "\n";
        if (r.contains("exit_code")) code = std::max(code, r["exit_code"].get<int>());
    }
    return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"workbench for boundary-pair forms, representations and s-calculus"};
    app.require_subcommand(1);

    RunConfig cfg;
    Source src;
    std::string batch_path, grid_text, system_path;
    int random_count = 0;
    bool whitehead = false;
    std::optional<std::int64_t> known_wh, known_b;

    const auto add_common = [&](CLI::App* cmd, bool with_source) {
        cmd->add_flag("--json", cfg.json_mode, "machine-readable output");
        cmd->add_option("--search-bound", cfg.search_bound, "metabolizer entry bound")
            ->default_val(5);
        cmd->add_option("--resolution", cfg.resolution, "signature integral resolution")
            ->default_val(4096);
        cmd->add_option("--seed", cfg.seed, "seed for randomized suites")->default_val(7);
        if (with_source) {
            cmd->add_option("--name", src.name, "knot name from the table");
            cmd->add_option("--matrix", src.matrix_path, "JSON file with a Seifert matrix");
            cmd->add_option("--braid", src.braid, "braid word, closure taken");
            cmd->add_option("--batch", batch_path, "JSONL input file, - for stdin");
        }
    };

    CLI::App* inv = app.add_subcommand("invariants", "knot invariant report");
    add_common(inv, true);
    CLI::App* bing = app.add_subcommand("bing", "Bing double obstruction report");
    add_common(bing, true);
    CLI::App* verify = app.add_subcommand("verify-paper", "run the bundled identity suite");
    add_common(verify, false);
    verify->add_option("--random", random_count, "extra randomized property checks");
    CLI::App* rep = app.add_subcommand("rep-check", "representation panel for a knot");
    add_common(rep, true);
    CLI::App* scalc = app.add_subcommand("s-calc", "deduce s-values from a constraint system");
    add_common(scalc, false);
    scalc->add_option("--system", system_path, "JSON constraint system file");
    scalc->add_flag("--whitehead", whitehead, "run the built-in Whitehead scenario");
    scalc->add_option("--known-wh", known_wh, "pin s(Wh) in the scenario");
    scalc->add_option("--known-b", known_b, "pin s(B) in the scenario");
    CLI::App* pbraid = app.add_subcommand("parse-braid", "parse a braid word and report stats");
    add_common(pbraid, false);
    pbraid->add_option("--braid", src.braid, "braid word")->required();
    CLI::App* tbgrid = app.add_subcommand("tb-grid", "Thurston-Bennequin number of a grid");
    add_common(tbgrid, false);
    tbgrid->add_option("--grid", grid_text, "grid text \"n; X=[...]; O=[...]\"")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
            out << app.help();
            return kExitOk;
        }
        err << e.what() << "\n";
        return kExitParse;
    }

    try {
        if (inv->parsed() || bing->parsed() || rep->parsed()) {
            const bool do_bing = bing->parsed();
            const bool do_rep = rep->parsed();
            if (!batch_path.empty()) {
                if (do_rep) throw InvalidInput("rep-check has no batch mode");
                return run_batch(batch_path, do_bing ? "bing" : "invariants", cfg, out);
            }
            if (!src.present())
                throw InvalidInput("one of --name, --matrix or --braid is required");
            const SeifertMatrix a = load_seifert(src);
            json j = do_bing ? bing_report(a, cfg)
                             : (do_rep ? rep_report(a) : invariants_report(a, cfg));
            j["source"] = source_json(src);
            if (cfg.json_mode) {
                emit(out, j);
            } else {
                if (do_bing) {
                    out << "knot: " << (a.name().empty() ? "(unnamed)" : a.name()) << "\n";
                    bing_human(out, j);
                } else if (do_rep) {
                    out << "knot: " << (a.name().empty() ? "(unnamed)" : a.name()) << "\n";
                    rep_human(out, j);
                } else {
                    invariants_human(out, j);
                }
            }
            return kExitOk;
        }
        if (verify->parsed()) return cmd_verify(out, cfg, random_count);
        if (scalc->parsed()) {
            if (whitehead != system_path.empty())
                throw InvalidInput("pass exactly one of --system FILE or --whitehead");
            if (whitehead) {
                const WhiteheadReport r = scenario_whitehead(known_wh, known_b);
                if (cfg.json_mode) {
                    emit(out, to_json(r));
                } else {
                    if (!r.solution.consistent) {
                        out << "inconsistent\n";
                        for (const auto& w : r.solution.witness) out << "  " << w << "\n";
                    } else {
                        out << "pairs (s(B), s(Wh)):";
                        for (const auto& [b, wh] : r.pairs)
                            out << " (" << b << ", " << wh << ")";
                        out << "\n";
                        for (const auto& [name, dom] : r.solution.domains)
                            out << name << ": " << dom.str() << "\n";
                    }
                }
                return kExitOk;
            }
            std::ifstream in(system_path);
            if (!in) throw InvalidInput("cannot read " + system_path);
            json j;
            try {
                in >> j;
            } catch (const json::parse_error& e) {
                throw ParseError(system_path + ": " + e.what());
            }
            const SolveResult r = solve(constraint_system_from_json(j));
            if (cfg.json_mode) {
                emit(out, to_json(r));
            } else {
                out << (r.consistent ? "consistent" : "inconsistent") << "\n";
                for (const auto& [name, dom] : r.domains)
                    out << name << ": " << dom.str() << "\n";
                for (const auto& step : r.trace) out << "  " << step << "\n";
                if (!r.consistent) {
                    out << "witness:\n";
                    for (const auto& w : r.witness) out << "  " << w << "\n";
                }
            }
            return kExitOk;
        }
        if (pbraid->parsed()) {
            const json j = braid_report(src.braid);
            if (cfg.json_mode)
                emit(out, j);
            else
                braid_human(out, j);
            return kExitOk;
        }
        if (tbgrid->parsed()) {
            const json j = grid_report(parse_grid(grid_text));
            if (cfg.json_mode)
                emit(out, j);
            else
                grid_human(out, j);
            return kExitOk;
        }
        throw InternalError("no subcommand dispatched");
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitUnknown;
    } catch (const json::parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << "\n";
        return kExitVerification;
    }
}

}  // namespace conclab
