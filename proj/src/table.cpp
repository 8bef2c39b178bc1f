#include "conclab/table.hpp"

#include <cstdlib>
#include <fstream>
#include <map>

#include "conclab/json_io.hpp"
#include "conclab/knot_invariants.hpp"

namespace conclab {

namespace {

LaurentPoly1 poly(std::initializer_list<long> coeffs) {
    LaurentPoly1 p;
    std::int64_t e = 0;
    for (long c : coeffs) p.set(e++, Int(c));
    return p;
}

struct Oracle {
    LaurentPoly1 delta;
    int sigma_minus_1;
};

const std::map<std::string, Oracle>& oracles() {
    static const std::map<std::string, Oracle> table = {
        {"unknot", {poly({1}), 0}},
        {"trefoil", {poly({1, -1, 1}), -2}},
        {"figure8", {poly({1, -3, 1}), 0}},
        {"stevedore", {poly({2, -5, 2}), 0}},
    };
    return table;
}

void validate(const KnotTable::Entry& e) {
    const auto it = oracles().find(e.name);
    if (it == oracles().end()) return;
    if (!(alexander(e.matrix) == it->second.delta))
        throw InvalidInput("table entry '" + e.name + "' fails its Alexander oracle");
    if (lt_signature(e.matrix, CirclePoint::minus_one()) != it->second.sigma_minus_1)
        throw InvalidInput("table entry '" + e.name + "' fails its signature oracle");
}

IntMatrix mat2(long a, long b, long c, long d) {
    IntMatrix m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

}  // namespace

KnotTable::KnotTable(std::vector<Entry> entries) : entries_(std::move(entries)) {
    for (const auto& e : entries_) validate(e);
}

KnotTable KnotTable::bundled() {
    std::vector<Entry> entries;
    entries.push_back({"unknot", SeifertMatrix(IntMatrix(), "unknot")});
    entries.push_back({"trefoil", SeifertMatrix(mat2(-1, 1, 0, -1), "trefoil")});
    entries.push_back({"figure8", SeifertMatrix(mat2(1, 1, 0, -1), "figure8")});
    entries.push_back({"stevedore", SeifertMatrix(mat2(1, 1, 0, -2), "stevedore")});
    return KnotTable(std::move(entries));
}

KnotTable KnotTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open knot table: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw InvalidInput("knot table is not valid JSON: " + std::string(ex.what()));
    }
    if (!j.is_array()) throw InvalidInput("knot table must be a JSON array");
    std::vector<Entry> entries;
    for (const auto& item : j) {
        if (!item.is_object() || !item.contains("name") || !item.contains("seifert_matrix"))
            throw InvalidInput("knot table entry needs name and seifert_matrix");
        const std::string name = item["name"].get<std::string>();
        entries.push_back({name, SeifertMatrix(int_matrix_from_json(item["seifert_matrix"]), name)});
    }
    return KnotTable(std::move(entries));
}

KnotTable KnotTable::resolve() {
    if (const char* path = std::getenv("CONCLAB_TABLE")) return load(path);
    return bundled();
}

const SeifertMatrix* KnotTable::find(const std::string& name) const {
    for (const auto& e : entries_)
        if (e.name == name) return &e.matrix;
    return nullptr;
}

}  // namespace conclab
