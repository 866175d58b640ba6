#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace exactform {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Largest |exponent| that constant folding will raise a rational to during
// canonicalization; beyond this the power stays symbolic.
inline constexpr std::int64_t kMaxFoldedExponent = 1 << 16;

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

bool fits_int64(const Integer& n);

// base^exp for integer exp with |exp| <= kMaxFoldedExponent.
// Precondition: base != 0 when exp < 0.
Rational pow_rational(const Rational& base, std::int64_t exp);

double to_double(const Rational& q);
std::string to_string(const Rational& q);

} // namespace exactform
