#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace grsobs {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// num/den with the sign normalized onto the numerator (the cpp_rational
// two-argument constructor rejects negative denominators). Throws on a zero
// denominator.
Rational make_rational(Int num, Int den);

// Lowest-terms rendering: "a/b", or bare "a" when the denominator is 1.
// The sign sits on the numerator.
std::string rational_to_string(const Rational& r);

// Inverse of rational_to_string. Accepts optional surrounding whitespace.
Rational rational_from_string(const std::string& text);

// Nearest integer; exact halves round down (deterministic tie rule).
Int round_to_int(const Rational& r);

Int floor_to_int(const Rational& r);
Int ceil_to_int(const Rational& r);

// Least integer t >= 0 with t*t >= r. Requires r >= 0.
Int ceil_sqrt(const Rational& r);

inline Int mod_positive(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace grsobs
