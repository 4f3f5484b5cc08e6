#include "minorstat/bigint.hpp"

#include <stdexcept>

namespace minorstat {

BigInt big_pow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(const BigInt& n, unsigned k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (n < k) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is a binomial coefficient after each step
  }
  return r;
}

std::string fixed_decimal(const BigRational& value, int places) {
  if (places < 0) throw std::invalid_argument("fixed_decimal: negative places");
  const bool negative = value < 0;
  const BigInt num = negative ? BigInt(-numerator(value)) : numerator(value);
  const BigInt den = denominator(value);
  const BigInt scale = big_pow(10, static_cast<unsigned>(places));

  BigInt q = num * scale / den;
  const BigInt r = num * scale % den;
  const BigInt twice = r * 2;
  if (twice > den || (twice == den && boost::multiprecision::bit_test(q, 0))) {
    ++q;
  }

  std::string digits = BigInt(q / scale).str();
  if (places > 0) {
    std::string frac = BigInt(q % scale).str();
    digits += "." + std::string(static_cast<size_t>(places) - frac.size(), '0') + frac;
  }
  return negative && q != 0 ? "-" + digits : digits;
}

}  // namespace minorstat
