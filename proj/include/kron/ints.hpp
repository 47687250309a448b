#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace kron {

// All counts, coefficients and matrix entries are exact. Alon-Tarsi numbers
// and omega-power coefficients overflow fixed width, so cpp_int everywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string to_dec(const Int& v) { return v.str(); }

inline Int parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    return Int(s);
}

inline Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace kron
