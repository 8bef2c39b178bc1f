#include "conclab/json_io.hpp"

#include <charconv>
#include <limits>

namespace conclab {

namespace {

using nlohmann::json;

Int int_from_string(const std::string& s) {
    if (s.empty()) throw InvalidInput("empty integer literal");
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw InvalidInput("bad integer literal: " + s);
    }
}

std::int64_t exponent_from_string(const std::string& s) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw InvalidInput("bad exponent literal: " + s);
    return v;
}

json coeff_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

Int coeff_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return int_from_string(j.get<std::string>());
    throw InvalidInput("coefficient must be an integer or a decimal string");
}

}  // namespace

Int int_from_json(const nlohmann::json& j) { return coeff_from_json(j); }

nlohmann::json int_to_json(const Int& v) { return v.str(); }

Rat rat_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    if (!j.is_string()) throw InvalidInput("rational must be \"p\" or \"p/q\"");
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(int_from_string(s));
    const Int num = int_from_string(s.substr(0, slash));
    const Int den = int_from_string(s.substr(slash + 1));
    if (den == 0) throw InvalidInput("zero denominator: " + s);
    return Rat(num, den);
}

nlohmann::json rat_to_json(const Rat& v) {
    const Int num = boost::multiprecision::numerator(v);
    const Int den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

nlohmann::json to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix int_matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw InvalidInput("matrix must be an array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    if (rows > 0) {
        if (!j[0].is_array()) throw InvalidInput("matrix row must be an array");
        cols = j[0].size();
    }
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw InvalidInput("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = coeff_from_json(j[r][c]);
    }
    return m;
}

nlohmann::json to_json(const RatMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rat_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMatrix rat_matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw InvalidInput("matrix must be an array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    if (rows > 0) {
        if (!j[0].is_array()) throw InvalidInput("matrix row must be an array");
        cols = j[0].size();
    }
    RatMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw InvalidInput("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rat_from_json(j[r][c]);
    }
    return m;
}

nlohmann::json to_json(const LaurentPoly1& p) {
    json obj = json::object();
    for (const auto& [e, c] : p.terms()) obj[std::to_string(e)] = coeff_to_json(c);
    return obj;
}

LaurentPoly1 laurent1_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InvalidInput("polynomial must be an object {exp: coeff}");
    LaurentPoly1 p;
    for (const auto& [key, value] : j.items())
        p.set(exponent_from_string(key), coeff_from_json(value));
    return p;
}

nlohmann::json to_json(const LaurentPoly2& p) {
    json obj = json::object();
    for (const auto& [e, c] : p.terms())
        obj[std::to_string(e.first) + "," + std::to_string(e.second)] = coeff_to_json(c);
    return obj;
}

LaurentPoly2 laurent2_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InvalidInput("polynomial must be an object {\"e1,e2\": coeff}");
    LaurentPoly2 p;
    for (const auto& [key, value] : j.items()) {
        const auto comma = key.find(',');
        if (comma == std::string::npos) throw InvalidInput("two-variable exponent needs a comma");
        p.set(exponent_from_string(key.substr(0, comma)),
              exponent_from_string(key.substr(comma + 1)), coeff_from_json(value));
    }
    return p;
}

nlohmann::json to_json(const BoundaryPairMatrix& x) {
    json out;
    out["m"] = x.components();
    json sizes = json::array();
    for (const std::size_t n : x.sizes()) sizes.push_back(n);
    out["sizes"] = std::move(sizes);
    json blocks = json::array();
    for (std::size_t i = 0; i < x.components(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < x.components(); ++j) row.push_back(to_json(x.block(i, j)));
        blocks.push_back(std::move(row));
    }
    out["blocks"] = std::move(blocks);
    return out;
}

BoundaryPairMatrix boundary_pair_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("blocks"))
        throw InvalidInput("boundary pair needs m and blocks");
    const auto m = j["m"].get<std::size_t>();
    const json& blocks = j["blocks"];
    if (!blocks.is_array() || blocks.size() != m)
        throw InvalidInput("boundary pair blocks must be an m x m grid");
    std::vector<std::vector<IntMatrix>> grid(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (!blocks[i].is_array() || blocks[i].size() != m)
            throw InvalidInput("boundary pair blocks must be an m x m grid");
        for (std::size_t k = 0; k < m; ++k) grid[i].push_back(int_matrix_from_json(blocks[i][k]));
    }
    BoundaryPairMatrix out(std::move(grid));
    if (j.contains("sizes")) {
        const auto declared = j["sizes"].get<std::vector<std::size_t>>();
        if (declared != out.sizes()) throw InvalidInput("declared sizes disagree with blocks");
    }
    return out;
}

nlohmann::json to_json(const ComponentCongruence& c) {
    json out;
    out["kind"] = "component_congruence";
    json mats = json::array();
    for (const auto& m : c.q) mats.push_back(to_json(m));
    out["matrices"] = std::move(mats);
    return out;
}

ComponentCongruence component_congruence_from_json(const nlohmann::json& j) {
    if (!j.is_object() || j.value("kind", "") != std::string("component_congruence") ||
        !j.contains("matrices"))
        throw InvalidInput("expected a component_congruence certificate");
    std::vector<IntMatrix> mats;
    for (const auto& item : j["matrices"]) mats.push_back(int_matrix_from_json(item));
    return ComponentCongruence(std::move(mats));
}

nlohmann::json to_json(const CComplexData& d) {
    json out;
    out["A"] = to_json(d.a);
    out["Aprime"] = to_json(d.aprime);
    return out;
}

CComplexData ccomplex_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("A") || !j.contains("Aprime"))
        throw InvalidInput("C-complex data needs A and Aprime");
    return {int_matrix_from_json(j["A"]), int_matrix_from_json(j["Aprime"])};
}

nlohmann::json to_json(const Representation& rep) {
    json out;
    out["dim"] = rep.dim();
    json ps = json::array();
    for (const auto& p : rep.projectors()) ps.push_back(to_json(p));
    out["projectors"] = std::move(ps);
    out["action"] = to_json(rep.action());
    out["form"] = to_json(rep.form());
    return out;
}

Representation representation_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("projectors") || !j.contains("action") ||
        !j.contains("form"))
        throw InvalidInput("representation needs projectors, action and form");
    std::vector<RatMatrix> ps;
    for (const auto& item : j["projectors"]) ps.push_back(rat_matrix_from_json(item));
    Representation rep(std::move(ps), rat_matrix_from_json(j["action"]),
                       rat_matrix_from_json(j["form"]));
    if (j.contains("dim") && j["dim"].get<std::size_t>() != rep.dim())
        throw InvalidInput("declared dim disagrees with the matrices");
    return rep;
}

nlohmann::json to_json(const GridDiagram& g) {
    json x = json::array();
    json o = json::array();
    for (std::size_t c = 0; c < g.size(); ++c) {
        x.push_back(g.x()[c] + 1);
        o.push_back(g.o()[c] + 1);
    }
    return json{{"size", g.size()}, {"X", std::move(x)}, {"O", std::move(o)}};
}

GridDiagram grid_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("size") || !j.contains("X") || !j.contains("O"))
        throw InvalidInput("grid needs size, X and O");
    const auto n = j["size"].get<std::size_t>();
    const auto read = [n](const json& arr, const char* which) {
        if (!arr.is_array() || arr.size() != n)
            throw InvalidInput(std::string(which) + " must list one row per column");
        std::vector<std::size_t> rows;
        for (const auto& item : arr) {
            const auto row = item.get<std::int64_t>();
            if (row < 1 || row > static_cast<std::int64_t>(n))
                throw InvalidInput(std::string(which) + " row out of range");
            rows.push_back(static_cast<std::size_t>(row - 1));
        }
        return rows;
    };
    return GridDiagram(read(j["X"], "X"), read(j["O"], "O"));
}

nlohmann::json to_json(const ValueSet& s) {
    if (s.is_finite()) return json{{"kind", "finite"}, {"values", s.values()}};
    json out{{"kind", "range"}, {"lo", nullptr}, {"hi", nullptr}, {"parity", nullptr}};
    if (s.lo()) out["lo"] = *s.lo();
    if (s.hi()) out["hi"] = *s.hi();
    if (s.parity()) out["parity"] = *s.parity() == 0 ? "even" : "odd";
    return out;
}

ValueSet valueset_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind")) throw InvalidInput("value set needs a kind");
    const auto kind = j["kind"].get<std::string>();
    if (kind == "finite") {
        if (!j.contains("values") || !j["values"].is_array())
            throw InvalidInput("finite value set needs a values array");
        return ValueSet::finite(j["values"].get<std::vector<std::int64_t>>());
    }
    if (kind != "range") throw InvalidInput("value set kind must be finite or range");
    std::optional<std::int64_t> lo, hi;
    std::optional<int> parity;
    if (j.contains("lo") && !j["lo"].is_null()) lo = j["lo"].get<std::int64_t>();
    if (j.contains("hi") && !j["hi"].is_null()) hi = j["hi"].get<std::int64_t>();
    if (j.contains("parity") && !j["parity"].is_null()) {
        const auto p = j["parity"].get<std::string>();
        if (p != "even" && p != "odd") throw InvalidInput("parity must be even or odd");
        parity = p == "even" ? 0 : 1;
    }
    return ValueSet::range(lo, hi, parity);
}

nlohmann::json to_json(const SConstraintSystem& sys) {
    json links = json::array();
    for (const auto& [name, m] : sys.links)
        links.push_back(json{{"name", name}, {"components", m}});
    json constraints = json::array();
    for (const auto& c : sys.constraints) {
        switch (c.kind) {
            case SConstraint::Kind::Known:
                constraints.push_back(json{{"kind", "known"}, {"link", c.link},
                                           {"value", c.value}});
                break;
            case SConstraint::Kind::PositiveDiagram:
                constraints.push_back(json{{"kind", "positive_diagram"}, {"link", c.link},
                                           {"crossings", c.crossings}, {"circles", c.circles}});
                break;
            case SConstraint::Kind::Parity:
                constraints.push_back(json{{"kind", "parity"}, {"link", c.link}});
                break;
            case SConstraint::Kind::Cobordism:
                constraints.push_back(json{{"kind", "cobordism"}, {"link", c.link},
                                           {"other", c.other}, {"chi", c.chi}});
                break;
        }
    }
    return json{{"links", std::move(links)}, {"constraints", std::move(constraints)}};
}

SConstraintSystem constraint_system_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("links") || !j.contains("constraints"))
        throw InvalidInput("constraint system needs links and constraints");
    SConstraintSystem sys;
    for (const auto& item : j["links"]) {
        if (!item.contains("name") || !item.contains("components"))
            throw InvalidInput("link entry needs name and components");
        sys.links.emplace_back(item["name"].get<std::string>(), item["components"].get<int>());
    }
    for (const auto& item : j["constraints"]) {
        if (!item.contains("kind") || !item.contains("link"))
            throw InvalidInput("constraint entry needs kind and link");
        const auto kind = item["kind"].get<std::string>();
        const auto link = item["link"].get<std::string>();
        const auto field = [&item, &kind](const char* key) -> const json& {
            if (!item.contains(key))
                throw InvalidInput(kind + " constraint needs a " + key + " field");
            return item[key];
        };
        if (kind == "known")
            sys.constraints.push_back(SConstraint::known(link, field("value").get<std::int64_t>()));
        else if (kind == "positive_diagram")
            sys.constraints.push_back(SConstraint::positive_diagram(
                link, field("crossings").get<std::int64_t>(),
                field("circles").get<std::int64_t>()));
        else if (kind == "parity")
            sys.constraints.push_back(SConstraint::parity(link));
        else if (kind == "cobordism")
            sys.constraints.push_back(SConstraint::cobordism(
                link, field("other").get<std::string>(), field("chi").get<std::int64_t>()));
        else
            throw InvalidInput("unknown constraint kind: " + kind);
    }
    return sys;
}

nlohmann::json to_json(const SolveResult& r) {
    json domains = json::object();
    for (const auto& [name, dom] : r.domains) domains[name] = to_json(dom);
    return json{{"consistent", r.consistent},
                {"domains", std::move(domains)},
                {"trace", r.trace},
                {"witness", r.witness}};
}

nlohmann::json to_json(const WhiteheadReport& r) {
    json pairs = json::array();
    for (const auto& [b, wh] : r.pairs) pairs.push_back(json::array({b, wh}));
    return json{{"pairs", std::move(pairs)}, {"solution", to_json(r.solution)}};
}

}  // namespace conclab
