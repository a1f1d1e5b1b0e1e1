#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "burnside/action.hpp"
#include "burnside/count.hpp"

namespace burnside {

enum class Theorem { fermat, fermat_prime_power, phi_sum };
enum class Route { action, modular, burnside_q1, direct_sum };

std::string to_string(Theorem theorem);
std::string to_string(Route route);

struct VerificationResult {
  Theorem theorem = Theorem::fermat;
  /// Named inputs in the order they were supplied.
  std::vector<std::pair<std::string, Count>> inputs;
  Route route = Route::modular;
  /// Evidence: counts, residues, summands. Counts are decimal strings.
  nlohmann::ordered_json witness = nlohmann::ordered_json::object();
  bool verified = false;
};

/// a^(p^j) == a (mod p) by modular exponentiation. Any integer a is accepted.
/// Throws UsageError unless p is prime and j >= 1.
VerificationResult verify_fermat_modular(const Count& a, std::uint64_t p, std::uint64_t j);

/// The same computation without the primality guard. Composite moduli are
/// how the self-test shows the modular check can fail.
VerificationResult fermat_modular_check(const Count& a, std::uint64_t modulus, std::uint64_t j);

/// |A^(p^j)| == |fixed points of C_(p^j)| (mod p) for A = {1..a}, with the
/// cyclic group shifting tuple positions.
VerificationResult verify_fermat_action(std::uint64_t a, std::uint64_t p, std::uint64_t j,
                                        FixedPointMode mode = FixedPointMode::automatic,
                                        std::uint64_t cap = kDefaultEnumerationCap);

/// sum over d | n of phi(d) == n, summed directly.
VerificationResult verify_phi_sum_direct(std::uint64_t n);

/// sum over d | n of phi(d) == n, read off the D_n edge-coloring action with a
/// single color: flip sum + rotation sum = 2n r with r = 1. n = 1, 2 fall back
/// to direct summation.
VerificationResult verify_phi_sum_burnside(std::uint64_t n,
                                           std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace burnside
