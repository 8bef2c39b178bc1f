#include "conclab/diagrams.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "conclab/int_matrix.hpp"

namespace conclab {

BraidWord::BraidWord(std::size_t strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) throw InvalidInput("a braid needs at least one strand");
    for (const int l : letters_)
        if (l == 0 || static_cast<std::size_t>(std::abs(l)) >= strands_)
            throw InvalidInput("braid letter out of range");
}

BraidWord parse_braid(const std::string& text, std::size_t strands_override) {
    std::istringstream in(text);
    std::vector<int> letters;
    std::string token;
    std::size_t index = 0;
    std::size_t max_abs = 0;
    while (in >> token) {
        ++index;
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw ParseError("token " + std::to_string(index) + ": not an integer");
        }
        if (used != token.size())
            throw ParseError("token " + std::to_string(index) + ": not an integer");
        if (value == 0) throw ParseError("token " + std::to_string(index) + ": zero letter");
        const auto a = static_cast<std::size_t>(std::abs(value));
        if (strands_override && a >= strands_override)
            throw ParseError("token " + std::to_string(index) + ": letter exceeds strand count");
        max_abs = std::max(max_abs, a);
        letters.push_back(value);
    }
    const std::size_t n = strands_override ? strands_override : std::max<std::size_t>(max_abs + 1, 1);
    return {n, std::move(letters)};
}

BraidWord sqp_expand(std::size_t i, std::size_t j, std::size_t n) {
    if (i < 1 || i >= j || j > n) throw InvalidInput("band generator needs 1 <= i < j <= n");
    std::vector<int> w;
    for (std::size_t k = i; k + 1 < j; ++k) w.push_back(static_cast<int>(k));
    w.push_back(static_cast<int>(j - 1));
    for (std::size_t k = j - 1; k > i; --k) w.push_back(-static_cast<int>(k - 1));
    return {n, std::move(w)};
}

namespace {

std::vector<std::size_t> strand_permutation(const BraidWord& b) {
    std::vector<std::size_t> perm(b.strands());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (const int l : b.letters()) {
        const auto i = static_cast<std::size_t>(std::abs(l)) - 1;
        std::swap(perm[i], perm[i + 1]);
    }
    return perm;
}

std::size_t cycle_count(const std::vector<std::size_t>& perm) {
    std::vector<bool> seen(perm.size());
    std::size_t cycles = 0;
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (std::size_t t = s; !seen[t]; t = perm[t]) seen[t] = true;
    }
    return cycles;
}

}  // namespace

BraidStats braid_stats(const BraidWord& b) {
    BraidStats st{};
    st.components = cycle_count(strand_permutation(b));
    st.writhe = 0;
    st.positive = true;
    for (const int l : b.letters()) {
        st.writhe += l > 0 ? 1 : -1;
        if (l < 0) st.positive = false;
    }
    st.seifert_circles = b.strands();
    return st;
}

long rasmussen_positive(const BraidWord& b) {
    const BraidStats st = braid_stats(b);
    if (!st.positive) throw InvalidInput("the crossing count formula needs a positive word");
    return static_cast<long>(b.letters().size()) - static_cast<long>(b.strands()) + 1;
}

long slice_bennequin_bound(const BraidWord& b) {
    return static_cast<long>(b.strands()) - braid_stats(b).writhe;
}

SeifertMatrix seifert_matrix_from_braid(const BraidWord& b) {
    if (braid_stats(b).components != 1)
        throw InvalidInput("the closure is not a knot: Seifert matrix undefined here");

    // Band generators: consecutive occurrences within one column.
    struct Gen {
        std::size_t column;
        std::size_t first, second;  // word positions
        int eps1, eps2;             // crossing signs at the two ends
    };
    std::vector<std::vector<std::pair<std::size_t, int>>> columns(b.strands());  // (pos, sign)
    for (std::size_t p = 0; p < b.letters().size(); ++p) {
        const int l = b.letters()[p];
        columns[static_cast<std::size_t>(std::abs(l)) - 1].emplace_back(p, l > 0 ? 1 : -1);
    }
    std::vector<Gen> gens;
    for (std::size_t c = 0; c + 1 < b.strands(); ++c)
        for (std::size_t k = 0; k + 1 < columns[c].size(); ++k)
            gens.push_back({c, columns[c][k].first, columns[c][k + 1].first,
                            columns[c][k].second, columns[c][k + 1].second});

    const long expected =
        static_cast<long>(b.letters().size()) - static_cast<long>(b.strands()) + 1;
    if (static_cast<long>(gens.size()) != expected)
        throw InternalError("band generator count disagrees with the rank formula");

    IntMatrix a(gens.size(), gens.size());
    for (std::size_t u = 0; u < gens.size(); ++u) a.at(u, u) = -(gens[u].eps1 + gens[u].eps2) / 2;
    for (std::size_t u = 0; u < gens.size(); ++u)
        for (std::size_t w = u + 1; w < gens.size(); ++w) {
            const Gen& gu = gens[u];
            const Gen& gw = gens[w];
            if (gu.column == gw.column && gu.second == gw.first) {
                // consecutive bands sharing the middle crossing
                const int eps = gu.eps2;
                a.at(u, w) = (1 + eps) / 2;
                a.at(w, u) = (eps - 1) / 2;
            } else if (gw.column == gu.column + 1) {
                // interleaved spans in adjacent columns link once
                if (gu.first < gw.first && gw.first < gu.second && gu.second < gw.second)
                    a.at(w, u) = 1;
                else if (gw.first < gu.first && gu.first < gw.second && gw.second < gu.second)
                    a.at(w, u) = -1;
            }
        }

    if (!is_unimodular(a - a.transpose()))
        throw InternalError("Bennequin surface matrix failed the unimodularity check");
    return SeifertMatrix(std::move(a), "braid closure");
}

GridDiagram::GridDiagram(std::vector<std::size_t> x, std::vector<std::size_t> o)
    : x_(std::move(x)), o_(std::move(o)) {
    const std::size_t n = x_.size();
    if (n == 0 || o_.size() != n) throw InvalidInput("grid needs X and O of equal positive size");
    std::vector<bool> xs(n), os(n);
    for (std::size_t c = 0; c < n; ++c) {
        if (x_[c] >= n || o_[c] >= n) throw InvalidInput("grid marker row out of range");
        if (x_[c] == o_[c]) throw InvalidInput("X and O collide in a column");
        if (xs[x_[c]] || os[o_[c]]) throw InvalidInput("grid markers are not permutations");
        xs[x_[c]] = os[o_[c]] = true;
    }
}

GridDiagram GridDiagram::mirrored() const {
    std::vector<std::size_t> x(x_.rbegin(), x_.rend()), o(o_.rbegin(), o_.rend());
    return {std::move(x), std::move(o)};
}

GridDiagram parse_grid(const std::string& text) {
    // "n; X=[a,b,...]; O=[a,b,...]", 1-based rows
    auto fail = [](const std::string& why) -> std::size_t { throw ParseError("grid: " + why); };
    auto strip = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r\n");
        const auto e = s.find_last_not_of(" \t\r\n");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto semi = text.find(';', start);
        parts.push_back(strip(text.substr(start, semi - start)));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    if (parts.size() != 3) fail("expected three ';'-separated fields");

    std::size_t n = 0;
    try {
        std::size_t used = 0;
        n = std::stoul(parts[0], &used);
        if (used != parts[0].size() || n == 0) fail("bad size field");
    } catch (const std::exception&) {
        fail("bad size field");
    }

    auto read_list = [&](const std::string& field, char name) {
        const std::string prefix = std::string(1, name) + "=[";
        if (field.rfind(prefix, 0) != 0 || field.back() != ']')
            fail(std::string("expected ") + name + "=[...]");
        std::vector<std::size_t> rows;
        std::istringstream in(field.substr(prefix.size(), field.size() - prefix.size() - 1));
        std::string item;
        while (std::getline(in, item, ',')) {
            item = strip(item);
            try {
                std::size_t used = 0;
                const unsigned long v = std::stoul(item, &used);
                if (used != item.size() || v < 1 || v > n) fail("marker row out of range");
                rows.push_back(v - 1);
            } catch (const ParseError&) {
                throw;
            } catch (const std::exception&) {
                fail("bad marker row");
            }
        }
        if (rows.size() != n) fail("marker list length disagrees with the size");
        return rows;
    };
    return {read_list(parts[1], 'X'), read_list(parts[2], 'O')};
}

long tb_grid(const GridDiagram& g) {
    const std::size_t n = g.size();

    // Trace X -> O along rows, O -> X along columns; a knot visits every column.
    std::vector<std::size_t> col_of_x(n), col_of_o(n);  // by row
    for (std::size_t c = 0; c < n; ++c) {
        col_of_x[g.x()[c]] = c;
        col_of_o[g.o()[c]] = c;
    }
    std::size_t visited = 0;
    std::size_t c = 0;
    do {
        ++visited;
        const std::size_t row = g.x()[c];  // horizontal segment of this row
        c = col_of_o[row];                 // continue along that O's column
    } while (c != 0);
    if (visited != n) throw InvalidInput("grid traces more than one component");

    long writhe = 0;
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t cx = col_of_x[r], co = col_of_o[r];
        const int h = co > cx ? 1 : -1;
        const auto [lo, hi] = std::minmax(cx, co);
        for (std::size_t cc = lo + 1; cc < hi; ++cc) {
            const std::size_t rx = g.x()[cc], ro = g.o()[cc];
            const auto [rlo, rhi] = std::minmax(rx, ro);
            if (rlo < r && r < rhi) {
                const int v = rx > ro ? 1 : -1;
                writhe += h * v;
            }
        }
    }

    long ne = 0;
    for (std::size_t cc = 0; cc < n; ++cc) {
        for (const std::size_t r : {g.x()[cc], g.o()[cc]}) {
            const bool right_end = cc == std::max(col_of_x[r], col_of_o[r]);
            const bool top_end = r == std::max(g.x()[cc], g.o()[cc]);
            if (right_end && top_end) ++ne;
        }
    }
    return writhe - ne;
}

}  // namespace conclab
