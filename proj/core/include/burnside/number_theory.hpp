#pragma once

#include <cstdint>
#include <vector>

#include "burnside/count.hpp"

namespace burnside {

/// Number of k in 1..n with gcd(k, n) = 1, via the prime-factor product
/// formula. Throws UsageError for n = 0.
std::uint64_t euler_phi(std::uint64_t n);

/// All positive divisors of n in increasing order. Throws UsageError for n = 0.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// gcd(0, 0) is 0.
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// Deterministic trial division.
bool is_prime(std::uint64_t n);

/// base^exp reduced into [0, modulus). Negative bases are reduced first.
/// Throws UsageError when modulus < 2 or exp < 0.
Count mod_pow(const Count& base, const Count& exp, const Count& modulus);

/// Least non-negative residue of value modulo modulus (modulus >= 1).
Count residue(const Count& value, const Count& modulus);

}  // namespace burnside
