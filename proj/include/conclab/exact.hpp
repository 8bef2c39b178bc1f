#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace conclab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Raised when an argument violates an operation's precondition.
struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a proved identity fails to hold; indicates an implementation bug.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Raised when text input cannot be read at all (as opposed to well-formed
// input that violates a precondition).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline int sign_of(const Rat& x) {
    if (x > 0) return 1;
    if (x < 0) return -1;
    return 0;
}

inline int sign_of(const Int& x) {
    if (x > 0) return 1;
    if (x < 0) return -1;
    return 0;
}

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Exact integer square root test; returns true and fills r when n = r^2.
inline bool perfect_square(const Int& n, Int& root) {
    if (n < 0) return false;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n) { root = r; return true; }
    if ((r + 1) * (r + 1) == n) { root = r + 1; return true; }
    return false;
}

}  // namespace conclab
