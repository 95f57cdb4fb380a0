#pragma once

// Exact scalar arithmetic. Every computation in this library happens over an
// exact field: arbitrary-precision rationals here, or a cyclotomic extension
// of them (cyclotomic.hpp). Floating point is never used.

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace peaklab {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 0
// and gcd(p, q) = 1.
std::string rational_to_string(const Rational& r);

// Parses "p" or "p/q" (optional sign on p). Throws std::invalid_argument on
// anything else, including q = 0.
Rational rational_from_string(const std::string& s);

// Degree cap for operations that enumerate a whole symmetric group. The
// default of 10 keeps accidental blowups impossible; the environment variable
// PEAKLAB_DEGREE_CAP overrides it.
int degree_cap();

// Throws std::invalid_argument when n is negative or exceeds degree_cap().
void require_degree(int n);

}  // namespace peaklab
