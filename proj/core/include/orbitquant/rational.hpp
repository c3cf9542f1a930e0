#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace orbitquant {

// All character coefficients are exact rationals; no floating point
// appears anywhere in the library.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// "3", "-1/2": denominator 1 is printed bare.
inline std::string to_string(const Rational& r) { return r.str(); }

inline std::string to_string(const Integer& n) { return n.str(); }

}  // namespace orbitquant
