#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gmchase {

// All probability arithmetic is exact: arbitrary-precision integers and
// canonical rationals (gcd-reduced, denominator > 0, equality exact).
// Floating point appears only in Monte Carlo reporting.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k), and 0 whenever k < 0 or k > n, so the pmf formulas stay total
// functions at the edges of their support.
Int binomial(long long n, long long k);

std::string to_string(const Int& value);

// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

}  // namespace gmchase
