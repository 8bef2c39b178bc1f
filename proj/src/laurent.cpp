#include "conclab/laurent.hpp"

#include <sstream>

namespace conclab {

LaurentPoly1 LaurentPoly1::constant(const Int& c) {
    LaurentPoly1 p;
    p.set(0, c);
    return p;
}

LaurentPoly1 LaurentPoly1::monomial(const Int& c, std::int64_t exp) {
    LaurentPoly1 p;
    p.set(exp, c);
    return p;
}

bool LaurentPoly1::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

void LaurentPoly1::set(std::int64_t exp, const Int& c) {
    if (c == 0)
        terms_.erase(exp);
    else
        terms_[exp] = c;
}

Int LaurentPoly1::coeff(std::int64_t exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

std::int64_t LaurentPoly1::min_exp() const {
    if (is_zero()) throw InvalidInput("min_exp of zero polynomial");
    return terms_.begin()->first;
}

std::int64_t LaurentPoly1::max_exp() const {
    if (is_zero()) throw InvalidInput("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

LaurentPoly1 LaurentPoly1::operator+(const LaurentPoly1& o) const {
    LaurentPoly1 p = *this;
    for (const auto& [e, c] : o.terms_) p.set(e, p.coeff(e) + c);
    return p;
}

LaurentPoly1 LaurentPoly1::operator-(const LaurentPoly1& o) const {
    LaurentPoly1 p = *this;
    for (const auto& [e, c] : o.terms_) p.set(e, p.coeff(e) - c);
    return p;
}

LaurentPoly1 LaurentPoly1::operator*(const LaurentPoly1& o) const {
    LaurentPoly1 p;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) p.set(e1 + e2, p.coeff(e1 + e2) + c1 * c2);
    return p;
}

LaurentPoly1 LaurentPoly1::operator-() const {
    LaurentPoly1 p;
    for (const auto& [e, c] : terms_) p.terms_[e] = -c;
    return p;
}

LaurentPoly1 LaurentPoly1::normalize() const {
    if (is_zero()) return {};
    const std::int64_t lo = min_exp();
    const bool flip = terms_.rbegin()->second < 0;
    LaurentPoly1 p;
    for (const auto& [e, c] : terms_) p.terms_[e - lo] = flip ? Int(-c) : c;
    return p;
}

LaurentPoly1 LaurentPoly1::reciprocal() const {
    LaurentPoly1 p;
    for (const auto& [e, c] : terms_) p.terms_[-e] = c;
    return p;
}

LaurentPoly1 LaurentPoly1::derivative() const {
    LaurentPoly1 p;
    for (const auto& [e, c] : terms_)
        if (e != 0) p.terms_[e - 1] = c * e;
    return p;
}

Int LaurentPoly1::eval_int(const Int& t) const {
    Int acc = 0;
    for (const auto& [e, c] : terms_) {
        if (e < 0) {
            if (t == 1) { acc += c; continue; }
            if (t == -1) { acc += (e % 2 == 0) ? c : Int(-c); continue; }
            throw InvalidInput("negative exponent in integer evaluation");
        }
        acc += c * boost::multiprecision::pow(t, static_cast<unsigned>(e));
    }
    return acc;
}

GaussRat LaurentPoly1::eval_gauss(const GaussRat& t) const {
    GaussRat acc{Rat(0), Rat(0)};
    for (const auto& [e, c] : terms_) {
        GaussRat term{Rat(c), Rat(0)};
        const std::int64_t n = e >= 0 ? e : -e;
        GaussRat base = e >= 0 ? t : GaussRat{Rat(1), Rat(0)} / t;
        for (std::int64_t k = 0; k < n; ++k) term = term * base;
        acc = acc + term;
    }
    return acc;
}

std::complex<double> LaurentPoly1::eval_complex(std::complex<double> t) const {
    std::complex<double> acc = 0.0;
    for (const auto& [e, c] : terms_)
        acc += static_cast<double>(c) * std::pow(t, static_cast<double>(e));
    return acc;
}

std::string LaurentPoly1::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        first = false;
        const Int a = abs_int(c);
        if (a != 1 || e == 0) out << a.str();
        if (e != 0) {
            if (a != 1) out << "*";
            out << var;
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

LaurentPoly2 LaurentPoly2::constant(const Int& c) {
    LaurentPoly2 p;
    p.set(0, 0, c);
    return p;
}

LaurentPoly2 LaurentPoly2::monomial(const Int& c, std::int64_t e1, std::int64_t e2) {
    LaurentPoly2 p;
    p.set(e1, e2, c);
    return p;
}

bool LaurentPoly2::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == std::pair<std::int64_t, std::int64_t>{0, 0} &&
           terms_.begin()->second == 1;
}

void LaurentPoly2::set(std::int64_t e1, std::int64_t e2, const Int& c) {
    if (c == 0)
        terms_.erase({e1, e2});
    else
        terms_[{e1, e2}] = c;
}

LaurentPoly2 LaurentPoly2::operator+(const LaurentPoly2& o) const {
    LaurentPoly2 p = *this;
    for (const auto& [e, c] : o.terms_) {
        auto it = p.terms_.find(e);
        Int v = (it == p.terms_.end() ? Int(0) : it->second) + c;
        p.set(e.first, e.second, v);
    }
    return p;
}

LaurentPoly2 LaurentPoly2::operator-(const LaurentPoly2& o) const {
    LaurentPoly2 p = *this;
    for (const auto& [e, c] : o.terms_) {
        auto it = p.terms_.find(e);
        Int v = (it == p.terms_.end() ? Int(0) : it->second) - c;
        p.set(e.first, e.second, v);
    }
    return p;
}

LaurentPoly2 LaurentPoly2::operator*(const LaurentPoly2& o) const {
    LaurentPoly2 p;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            auto key = std::pair{e1.first + e2.first, e1.second + e2.second};
            auto it = p.terms_.find(key);
            Int v = (it == p.terms_.end() ? Int(0) : it->second) + c1 * c2;
            p.set(key.first, key.second, v);
        }
    return p;
}

LaurentPoly2 LaurentPoly2::normalize() const {
    if (is_zero()) return {};
    std::int64_t lo1 = terms_.begin()->first.first, lo2 = terms_.begin()->first.second;
    for (const auto& [e, c] : terms_) {
        lo1 = std::min(lo1, e.first);
        lo2 = std::min(lo2, e.second);
    }
    const bool flip = terms_.rbegin()->second < 0;
    LaurentPoly2 p;
    for (const auto& [e, c] : terms_)
        p.terms_[{e.first - lo1, e.second - lo2}] = flip ? Int(-c) : c;
    return p;
}

LaurentPoly1 LaurentPoly2::diagonal() const {
    LaurentPoly1 p;
    for (const auto& [e, c] : terms_) p.set(e.first + e.second, p.coeff(e.first + e.second) + c);
    return p;
}

std::string LaurentPoly2::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        first = false;
        const Int a = abs_int(c);
        bool printed = false;
        if (a != 1 || (e.first == 0 && e.second == 0)) {
            out << a.str();
            printed = true;
        }
        auto var = [&](const char* name, std::int64_t exp) {
            if (exp == 0) return;
            if (printed) out << "*";
            out << name;
            if (exp != 1) out << "^" << exp;
            printed = true;
        };
        var("t1", e.first);
        var("t2", e.second);
    }
    return out.str();
}

}  // namespace conclab
