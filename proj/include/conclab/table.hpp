#pragma once

#include <string>
#include <vector>

#include "conclab/seifert.hpp"

namespace conclab {

// Named Seifert matrices. Every table (bundled or loaded from JSON) is
// validated entry by entry: the Seifert constraint at construction, plus
// Alexander-polynomial and signature oracles for the names that have them.
class KnotTable {
public:
    struct Entry {
        std::string name;
        SeifertMatrix matrix;
    };

    // The four bundled knots: unknot, trefoil, figure8, stevedore.
    static KnotTable bundled();

    // JSON file: [{"name": ..., "seifert_matrix": [[...], ...]}, ...].
    static KnotTable load(const std::string& path);

    // CONCLAB_TABLE environment override when set, else the bundled table.
    static KnotTable resolve();

    const SeifertMatrix* find(const std::string& name) const;
    const std::vector<Entry>& entries() const { return entries_; }

private:
    explicit KnotTable(std::vector<Entry> entries);

    std::vector<Entry> entries_;
};

}  // namespace conclab
