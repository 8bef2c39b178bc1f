#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "conclab/seifert.hpp"

namespace conclab {

// A word in the braid group B_n: letter +-i stands for sigma_i^{+-1}.
class BraidWord {
public:
    BraidWord(std::size_t strands, std::vector<int> letters);

    std::size_t strands() const { return strands_; }
    const std::vector<int>& letters() const { return letters_; }

private:
    std::size_t strands_;
    std::vector<int> letters_;
};

// Whitespace-separated signed integers; strand count defaults to
// max|letter| + 1 (at least 1) unless overridden. Bad tokens, zero letters
// and out-of-range letters are reported with their 1-based token position.
BraidWord parse_braid(const std::string& text, std::size_t strands_override = 0);

// sigma_{ij} = (sigma_i ... sigma_{j-2}) sigma_{j-1} (sigma_i ... sigma_{j-2})^{-1},
// the band generator; requires 1 <= i < j <= n. Writhe is always +1.
BraidWord sqp_expand(std::size_t i, std::size_t j, std::size_t n);

struct BraidStats {
    std::size_t components;       // cycles of the strand permutation
    long writhe;                  // sum of letter signs
    std::size_t seifert_circles;  // = strands for a braid closure diagram
    bool positive;                // every letter positive (empty word counts)
};

BraidStats braid_stats(const BraidWord& b);

// s of the closure of a positive braid: crossings - Seifert circles + 1.
// Rejects words with a negative letter.
long rasmussen_positive(const BraidWord& b);

// Upper bound n - writhe for the greatest slice Euler characteristic of the
// closure. No positivity assumption.
long slice_bennequin_bound(const BraidWord& b);

// Seifert matrix of the Bennequin surface of the closure, on the standard
// band generators (consecutive same-column letter pairs, ordered by column
// then occurrence). Requires a connected closure. Positive generators
// follow the bundled-table chirality: "1 1 1" reproduces the stored trefoil
// matrix exactly.
SeifertMatrix seifert_matrix_from_braid(const BraidWord& b);

// Rectilinear diagram on an n x n grid. X[c] and O[c] are the 0-based rows
// of the markers in column c (rows increase upward); rows and columns each
// carry exactly one X and one O. Horizontal segments run X -> O and pass
// over vertical segments, which run O -> X.
class GridDiagram {
public:
    GridDiagram(std::vector<std::size_t> x, std::vector<std::size_t> o);

    std::size_t size() const { return x_.size(); }
    const std::vector<std::size_t>& x() const { return x_; }
    const std::vector<std::size_t>& o() const { return o_; }

    // Left-right reflection (column c -> n-1-c).
    GridDiagram mirrored() const;

private:
    std::vector<std::size_t> x_, o_;
};

// "n; X=[...]; O=[...]" with 1-based entries.
GridDiagram parse_grid(const std::string& text);

// writhe minus the number of northeastern corners, horizontal-over
// convention. Rejects grids tracing more than one component.
long tb_grid(const GridDiagram& g);

}  // namespace conclab
