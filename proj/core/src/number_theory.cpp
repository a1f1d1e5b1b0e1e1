#include "burnside/number_theory.hpp"

#include <algorithm>
#include <numeric>

namespace burnside {

Count power(const Count& base, std::uint64_t exp) {
  Count result = 1;
  Count square = base;
  while (exp > 0) {
    if (exp & 1U) result *= square;
    exp >>= 1U;
    if (exp > 0) square *= square;
  }
  return result;
}

Count exact_divide(const Count& numerator, const Count& denominator, const std::string& what) {
  if (denominator == 0) throw InternalError(what + ": division by zero");
  Count quotient;
  Count remainder;
  boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
  if (remainder != 0) {
    throw InternalError(what + ": " + numerator.str() + " is not divisible by " +
                        denominator.str());
  }
  return quotient;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw UsageError("euler_phi: n must be >= 1");
  std::uint64_t result = n;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p <= rest / p; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw UsageError("divisors: n must be >= 1");
  std::vector<std::uint64_t> small;
  std::vector<std::uint64_t> large;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Count residue(const Count& value, const Count& modulus) {
  if (modulus < 1) throw UsageError("residue: modulus must be >= 1");
  Count r = value % modulus;
  if (r < 0) r += modulus;
  return r;
}

Count mod_pow(const Count& base, const Count& exp, const Count& modulus) {
  if (modulus < 2) throw UsageError("mod_pow: modulus must be >= 2");
  if (exp < 0) throw UsageError("mod_pow: exponent must be >= 0");
  Count result = 1;
  Count square = residue(base, modulus);
  Count e = exp;
  while (e > 0) {
    if (boost::multiprecision::bit_test(e, 0)) result = (result * square) % modulus;
    e >>= 1;
    if (e > 0) square = (square * square) % modulus;
  }
  return result;
}

}  // namespace burnside
