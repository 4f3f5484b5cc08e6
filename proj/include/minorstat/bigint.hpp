#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace minorstat {

// Arbitrary-precision integers and reduced rationals. cpp_rational keeps
// gcd(|num|, den) = 1 and den >= 1 as a class invariant, which is exactly
// the contract the rest of the library relies on for exact comparisons.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const BigRational& q) {
  return boost::multiprecision::numerator(q);
}

inline BigInt denominator(const BigRational& q) {
  return boost::multiprecision::denominator(q);
}

BigInt big_pow(const BigInt& base, unsigned exp);
BigInt factorial(unsigned n);
BigInt binomial(const BigInt& n, unsigned k);

/// Fixed-point decimal rendering with round-half-to-even,
/// e.g. fixed_decimal(17/32, 4) == "0.5312".
std::string fixed_decimal(const BigRational& value, int places);

}  // namespace minorstat
