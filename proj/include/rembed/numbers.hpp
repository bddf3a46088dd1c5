#ifndef REMBED_NUMBERS_HPP
#define REMBED_NUMBERS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace rembed {

// All counting arithmetic is exact.  Counts (class sizes, distribution
// weights, polynomial coefficients) are arbitrary-precision integers;
// expectations and probabilities are exact rationals.  Floating point is
// confined to display and to the inherently transcendental log bounds.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);
BigInt binomial(int n, int k);

// H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0.
Rational harmonic(int n);

std::string to_string(const BigInt& v);

// "p/q", or just "p" when q == 1.
std::string to_string(const Rational& v);

// Display-only decimal with 12 significant digits.
std::string to_decimal(const Rational& v);
std::string to_decimal(double v);

} // namespace rembed

#endif
