#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace magnusforest {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar used throughout the library. cpp_rational keeps
// every value normalized (gcd(num, den) = 1, den > 0), which is the
// invariant the series and integral code relies on.
using Rational = boost::multiprecision::cpp_rational;

Integer binomial(int n, int k);
Integer factorial(int n);

double to_double(const Rational& r);

// "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& r);

// Accepts "p" and "p/q" with an optional leading '-'. Throws
// std::invalid_argument on malformed input or a zero denominator.
Rational rational_from_string(const std::string& text);

}  // namespace magnusforest
