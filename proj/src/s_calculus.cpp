#include "conclab/s_calculus.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace conclab {

namespace {

// bounded domains up to this many members are materialized as finite sets
constexpr std::int64_t kMaterializeLimit = 64;

std::int64_t shift_up_to_parity(std::int64_t v, int parity) {
    const int r = static_cast<int>(((v % 2) + 2) % 2);
    return r == parity ? v : v + 1;
}

std::int64_t shift_down_to_parity(std::int64_t v, int parity) {
    const int r = static_cast<int>(((v % 2) + 2) % 2);
    return r == parity ? v : v - 1;
}

}  // namespace

ValueSet ValueSet::all() { return range(std::nullopt, std::nullopt, std::nullopt); }

ValueSet ValueSet::finite(std::vector<std::int64_t> values) {
    ValueSet s;
    s.finite_ = true;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    s.values_ = std::move(values);
    return s;
}

ValueSet ValueSet::range(std::optional<std::int64_t> lo, std::optional<std::int64_t> hi,
                         std::optional<int> parity) {
    if (parity && *parity != 0 && *parity != 1) throw InvalidInput("parity must be 0 or 1");
    ValueSet s;
    s.lo_ = lo;
    s.hi_ = hi;
    s.parity_ = parity;
    s.normalize();
    return s;
}

void ValueSet::normalize() {
    if (finite_) return;
    if (parity_) {
        if (lo_) lo_ = shift_up_to_parity(*lo_, *parity_);
        if (hi_) hi_ = shift_down_to_parity(*hi_, *parity_);
    }
    if (lo_ && hi_) {
        if (*lo_ > *hi_) {
            finite_ = true;
            values_.clear();
            return;
        }
        const std::int64_t step = parity_ ? 2 : 1;
        const std::int64_t count = (*hi_ - *lo_) / step + 1;
        if (count <= kMaterializeLimit) {
            finite_ = true;
            for (std::int64_t v = *lo_; v <= *hi_; v += step) values_.push_back(v);
        }
    }
}

const std::vector<std::int64_t>& ValueSet::values() const {
    if (!finite_) throw InvalidInput("not a finite value set");
    return values_;
}

std::optional<std::int64_t> ValueSet::lo() const {
    if (finite_) throw InvalidInput("not a range value set");
    return lo_;
}

std::optional<std::int64_t> ValueSet::hi() const {
    if (finite_) throw InvalidInput("not a range value set");
    return hi_;
}

std::optional<int> ValueSet::parity() const {
    if (finite_) throw InvalidInput("not a range value set");
    return parity_;
}

bool ValueSet::contains(std::int64_t v) const {
    if (finite_) return std::binary_search(values_.begin(), values_.end(), v);
    if (lo_ && v < *lo_) return false;
    if (hi_ && v > *hi_) return false;
    if (parity_ && ((v % 2) + 2) % 2 != *parity_) return false;
    return true;
}

bool ValueSet::is_subset_of(const ValueSet& other) const {
    if (finite_) {
        for (const std::int64_t v : values_)
            if (!other.contains(v)) return false;
        return true;
    }
    if (other.finite_) {
        // a normalized range is unbounded or too large to fit a finite set
        return false;
    }
    if (other.lo_ && (!lo_ || *lo_ < *other.lo_)) return false;
    if (other.hi_ && (!hi_ || *hi_ > *other.hi_)) return false;
    if (other.parity_ && parity_ != other.parity_) return false;
    return true;
}

ValueSet ValueSet::intersect(const ValueSet& other) const {
    if (finite_ || other.finite_) {
        const ValueSet& fin = finite_ ? *this : other;
        const ValueSet& rest = finite_ ? other : *this;
        std::vector<std::int64_t> kept;
        for (const std::int64_t v : fin.values_)
            if (rest.contains(v)) kept.push_back(v);
        return finite(std::move(kept));
    }
    std::optional<std::int64_t> lo = lo_, hi = hi_;
    if (other.lo_ && (!lo || *other.lo_ > *lo)) lo = other.lo_;
    if (other.hi_ && (!hi || *other.hi_ < *hi)) hi = other.hi_;
    std::optional<int> parity = parity_ ? parity_ : other.parity_;
    if (parity_ && other.parity_ && *parity_ != *other.parity_)
        return finite({});  // no integer is both even and odd
    return range(lo, hi, parity);
}

ValueSet ValueSet::widen(std::int64_t c) const {
    if (c < 0) throw InvalidInput("widening radius must be non-negative");
    if (c == 0 || is_empty()) return *this;
    if (finite_)
        return range(values_.front() - c, values_.back() + c, std::nullopt);
    std::optional<std::int64_t> lo = lo_, hi = hi_;
    if (lo) lo = *lo - c;
    if (hi) hi = *hi + c;
    return range(lo, hi, std::nullopt);
}

bool ValueSet::operator==(const ValueSet& other) const {
    if (finite_ != other.finite_) return false;
    if (finite_) return values_ == other.values_;
    return lo_ == other.lo_ && hi_ == other.hi_ && parity_ == other.parity_;
}

std::string ValueSet::str() const {
    if (finite_) {
        std::string out = "{";
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (i) out += ", ";
            out += std::to_string(values_[i]);
        }
        return out + "}";
    }
    std::string out = lo_ ? "[" + std::to_string(*lo_) : "(-oo";
    out += ", ";
    out += hi_ ? std::to_string(*hi_) + "]" : "oo)";
    if (parity_) out += *parity_ == 0 ? " (even)" : " (odd)";
    return out;
}

SConstraint SConstraint::known(std::string link, std::int64_t value) {
    SConstraint c;
    c.kind = Kind::Known;
    c.link = std::move(link);
    c.value = value;
    return c;
}

SConstraint SConstraint::positive_diagram(std::string link, std::int64_t crossings,
                                          std::int64_t circles) {
    SConstraint c;
    c.kind = Kind::PositiveDiagram;
    c.link = std::move(link);
    c.crossings = crossings;
    c.circles = circles;
    return c;
}

SConstraint SConstraint::parity(std::string link) {
    SConstraint c;
    c.kind = Kind::Parity;
    c.link = std::move(link);
    return c;
}

SConstraint SConstraint::cobordism(std::string link, std::string other, std::int64_t chi) {
    SConstraint c;
    c.kind = Kind::Cobordism;
    c.link = std::move(link);
    c.other = std::move(other);
    c.chi = chi;
    return c;
}

std::string SConstraint::describe() const {
    switch (kind) {
        case Kind::Known:
            return "Known(" + link + " = " + std::to_string(value) + ")";
        case Kind::PositiveDiagram:
            return "PositiveDiagram(" + link + ": n = " + std::to_string(crossings) +
                   ", k = " + std::to_string(circles) + ")";
        case Kind::Parity:
            return "Parity(" + link + ")";
        case Kind::Cobordism:
            return "Cobordism(" + link + " ~ " + other + ", chi = " + std::to_string(chi) + ")";
    }
    throw InternalError("unhandled constraint kind");
}

namespace {

struct Solver {
    const SConstraintSystem& sys;
    std::map<std::string, int> components;
    std::map<std::string, ValueSet> domains;
    std::vector<std::string> trace;
    std::map<std::string, std::vector<std::string>> chains;
    SolveResult out;

    explicit Solver(const SConstraintSystem& s) : sys(s) {
        for (const auto& [name, m] : sys.links) {
            if (name.empty()) throw InvalidInput("link name must be non-empty");
            if (m < 1) throw InvalidInput("link " + name + " needs at least one component");
            if (!components.emplace(name, m).second)
                throw InvalidInput("duplicate link name: " + name);
            domains.emplace(name, ValueSet::all());
        }
        for (const auto& c : sys.constraints) {
            require_link(c.link);
            if (c.kind == SConstraint::Kind::Cobordism) {
                require_link(c.other);
                if (c.chi > 0)
                    throw InvalidInput("cobordism must have non-positive Euler characteristic");
            }
            if (c.kind == SConstraint::Kind::PositiveDiagram) {
                if (c.crossings < 0) throw InvalidInput("negative crossing count");
                if (c.circles < 1) throw InvalidInput("a diagram has at least one circle");
            }
        }
    }

    void require_link(const std::string& name) const {
        if (!components.count(name)) throw InvalidInput("constraint references undeclared link " + name);
    }

    // returns false and finalizes the witness when the domain empties
    bool tighten(const std::string& name, const ValueSet& by, const std::string& reason) {
        ValueSet& dom = domains.at(name);
        const ValueSet next = dom.intersect(by);
        if (next == dom) return true;
        const std::string step = reason + ": " + name + " " + dom.str() + " -> " + next.str();
        trace.push_back(step);
        chains[name].push_back(step);
        dom = next;
        if (dom.is_empty()) {
            out.consistent = false;
            out.witness = chains[name];
            return false;
        }
        return true;
    }

    bool apply(const SConstraint& c) {
        switch (c.kind) {
            case SConstraint::Kind::Known:
                return tighten(c.link, ValueSet::finite({c.value}), c.describe());
            case SConstraint::Kind::PositiveDiagram:
                return tighten(c.link, ValueSet::finite({c.crossings - c.circles + 1}),
                               c.describe());
            case SConstraint::Kind::Parity: {
                const int p = (components.at(c.link) - 1) % 2;
                return tighten(c.link,
                               ValueSet::range(std::nullopt, std::nullopt, p), c.describe());
            }
            case SConstraint::Kind::Cobordism: {
                const std::int64_t r = -c.chi;
                if (!tighten(c.link, domains.at(c.other).widen(r), c.describe())) return false;
                return tighten(c.other, domains.at(c.link).widen(r), c.describe());
            }
        }
        throw InternalError("unhandled constraint kind");
    }

    bool satisfied(const SConstraint& c, const std::map<std::string, std::int64_t>& a) const {
        switch (c.kind) {
            case SConstraint::Kind::Known:
                return a.at(c.link) == c.value;
            case SConstraint::Kind::PositiveDiagram:
                return a.at(c.link) == c.crossings - c.circles + 1;
            case SConstraint::Kind::Parity:
                return ((a.at(c.link) % 2) + 2) % 2 == (components.at(c.link) - 1) % 2;
            case SConstraint::Kind::Cobordism: {
                const std::int64_t d = a.at(c.link) - a.at(c.other);
                return (d < 0 ? -d : d) <= -c.chi;
            }
        }
        throw InternalError("unhandled constraint kind");
    }

    // When every domain is finite and the product is small, keep only the
    // values that take part in a full satisfying assignment. This is what
    // makes the reported sets exact rather than merely arc-consistent.
    bool refine() {
        std::vector<std::string> names;
        std::int64_t product = 1;
        for (const auto& [name, dom] : domains) {
            if (!dom.is_finite()) return true;
            names.push_back(name);
            product *= static_cast<std::int64_t>(dom.values().size());
            if (product > 200000) return true;  // leave the propagated fixpoint
        }
        std::map<std::string, std::set<std::int64_t>> supported;
        std::map<std::string, std::int64_t> assignment;
        bool any = false;
        const std::function<void(std::size_t)> recurse = [&](std::size_t i) {
            if (i == names.size()) {
                for (const auto& c : sys.constraints)
                    if (!satisfied(c, assignment)) return;
                any = true;
                for (const auto& [name, v] : assignment) supported[name].insert(v);
                return;
            }
            for (const std::int64_t v : domains.at(names[i]).values()) {
                assignment[names[i]] = v;
                recurse(i + 1);
            }
        };
        recurse(0);
        if (!any) {
            out.consistent = false;
            out.witness = trace;
            out.witness.push_back("no joint assignment satisfies all constraints");
            return false;
        }
        for (const auto& [name, vals] : supported) {
            const ValueSet next =
                ValueSet::finite(std::vector<std::int64_t>(vals.begin(), vals.end()));
            if (next != domains.at(name)) {
                trace.push_back("joint refinement: " + name + " " + domains.at(name).str() +
                                " -> " + next.str());
                domains.at(name) = next;
            }
        }
        return true;
    }

    SolveResult run() {
        const std::size_t cap = 4 * sys.links.size() + sys.constraints.size() + 16;
        bool changed = true;
        std::size_t passes = 0;
        while (changed) {
            if (++passes > cap) throw InternalError("propagation failed to stabilize");
            changed = false;
            const std::size_t before = trace.size();
            for (const auto& c : sys.constraints)
                if (!apply(c)) {
                    out.domains = std::move(domains);
                    out.trace = std::move(trace);
                    return std::move(out);
                }
            changed = trace.size() != before;
        }
        if (!refine()) {
            out.domains = std::move(domains);
            out.trace = std::move(trace);
            return std::move(out);
        }
        out.domains = std::move(domains);
        out.trace = std::move(trace);
        return std::move(out);
    }
};

}  // namespace

SolveResult solve(const SConstraintSystem& sys) { return Solver(sys).run(); }

WhiteheadReport scenario_whitehead(std::optional<std::int64_t> known_wh,
                                   std::optional<std::int64_t> known_b) {
    SConstraintSystem sys;
    sys.links = {{"Hopf+", 2}, {"Hopf-", 2}, {"B", 2}, {"Wh", 1}};
    sys.constraints = {
        SConstraint::positive_diagram("Hopf+", 2, 2),
        SConstraint::known("Hopf-", -1),
        SConstraint::cobordism("B", "Hopf+", -2),
        SConstraint::cobordism("B", "Hopf-", -2),
        SConstraint::parity("B"),
        SConstraint::parity("Wh"),
        SConstraint::cobordism("B", "Wh", -1),
        SConstraint::cobordism("Wh", "Hopf+", -1),
    };
    if (known_wh) sys.constraints.push_back(SConstraint::known("Wh", *known_wh));
    if (known_b) sys.constraints.push_back(SConstraint::known("B", *known_b));

    WhiteheadReport report;
    report.solution = solve(sys);
    if (!report.solution.consistent) return report;

    for (const auto& [name, dom] : report.solution.domains)
        if (!dom.is_finite()) throw InternalError("whitehead scenario left " + name + " unbounded");

    std::map<std::string, std::int64_t> assignment;
    std::vector<std::string> names;
    for (const auto& [name, dom] : report.solution.domains) names.push_back(name);
    std::set<std::pair<std::int64_t, std::int64_t>> pairs;
    const Solver checker(sys);
    const std::function<void(std::size_t)> recurse = [&](std::size_t i) {
        if (i == names.size()) {
            for (const auto& c : sys.constraints)
                if (!checker.satisfied(c, assignment)) return;
            pairs.emplace(assignment.at("B"), assignment.at("Wh"));
            return;
        }
        for (const std::int64_t v : report.solution.domains.at(names[i]).values()) {
            assignment[names[i]] = v;
            recurse(i + 1);
        }
    };
    recurse(0);
    report.pairs.assign(pairs.begin(), pairs.end());
    return report;
}

}  // namespace conclab
