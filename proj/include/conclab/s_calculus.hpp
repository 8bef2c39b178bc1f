#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conclab/exact.hpp"

namespace conclab {

// Domain of possible s-values for one link: an explicit finite set, or an
// interval filtered by parity. Normalization keeps every bounded domain that
// is small enough to enumerate in the finite form, so a Range value is
// unbounded on at least one side in practice.
class ValueSet {
public:
    static ValueSet all();
    static ValueSet finite(std::vector<std::int64_t> values);
    static ValueSet range(std::optional<std::int64_t> lo, std::optional<std::int64_t> hi,
                          std::optional<int> parity);

    bool is_finite() const { return finite_; }
    bool is_empty() const { return finite_ && values_.empty(); }
    // pre: is_finite()
    const std::vector<std::int64_t>& values() const;
    // pre: !is_finite()
    std::optional<std::int64_t> lo() const;
    std::optional<std::int64_t> hi() const;
    std::optional<int> parity() const;

    bool contains(std::int64_t v) const;
    bool is_subset_of(const ValueSet& other) const;
    ValueSet intersect(const ValueSet& other) const;
    // Minkowski sum with [-c, c]; for a finite set with c > 0 this takes the
    // convex hull, which may over-approximate a disconnected union.
    ValueSet widen(std::int64_t c) const;

    bool operator==(const ValueSet& other) const;
    bool operator!=(const ValueSet& other) const { return !(*this == other); }

    // "{-1, 1}", "[0, oo) (even)", "(-oo, oo)", ...
    std::string str() const;

private:
    ValueSet() = default;

    bool finite_ = false;
    std::vector<std::int64_t> values_;       // finite form: sorted, distinct
    std::optional<std::int64_t> lo_, hi_;    // range form
    std::optional<int> parity_;              // 0 even, 1 odd

    void normalize();
};

// One deduction fact about s-values. The semantics:
//   Known            s(link) = value
//   PositiveDiagram  s(link) = crossings - circles + 1
//   Parity           s(link) = m - 1 (mod 2), m = declared component count
//   Cobordism        |s(link) - s(other)| <= -chi, chi <= 0
struct SConstraint {
    enum class Kind { Known, PositiveDiagram, Parity, Cobordism };

    Kind kind;
    std::string link;
    std::string other;          // Cobordism only
    std::int64_t value = 0;     // Known
    std::int64_t crossings = 0; // PositiveDiagram
    std::int64_t circles = 0;   // PositiveDiagram
    std::int64_t chi = 0;       // Cobordism

    static SConstraint known(std::string link, std::int64_t value);
    static SConstraint positive_diagram(std::string link, std::int64_t crossings,
                                        std::int64_t circles);
    static SConstraint parity(std::string link);
    static SConstraint cobordism(std::string link, std::string other, std::int64_t chi);

    std::string describe() const;
};

struct SConstraintSystem {
    // name -> component count, in declaration order
    std::vector<std::pair<std::string, int>> links;
    std::vector<SConstraint> constraints;
};

struct SolveResult {
    bool consistent = true;
    std::map<std::string, ValueSet> domains;
    // every domain tightening, in order
    std::vector<std::string> trace;
    // when inconsistent: the chain of tightenings of the emptied link,
    // ending in the violated constraint
    std::vector<std::string> witness;
};

// Fixed-point propagation of the interval+parity domains, followed by an
// exhaustive refinement pass when every domain is finite: each reported
// value then extends to a full assignment satisfying all constraints.
// Throws InvalidInput when the system itself is malformed (undeclared link,
// positive chi, duplicate names, ...).
SolveResult solve(const SConstraintSystem& sys);

struct WhiteheadReport {
    SolveResult solution;
    // consistent joint values (s(B), s(Wh)), sorted
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
};

// The scripted derivation for a Bing double B = B(K) and Whitehead double
// Wh = Wh(K): B and the two Hopf links are related by annulus cobordisms of
// Euler characteristic -2, Wh and B by a band of characteristic -1, Wh and
// the positive Hopf link likewise; B has two components, Wh one. Optional
// facts pin s(Wh) or s(B) on top.
WhiteheadReport scenario_whitehead(std::optional<std::int64_t> known_wh = std::nullopt,
                                   std::optional<std::int64_t> known_b = std::nullopt);

}  // namespace conclab
