#include "burnside/verifiers.hpp"

#include "burnside/counting.hpp"
#include "burnside/number_theory.hpp"
#include "burnside/permutation.hpp"

namespace burnside {
namespace {

Theorem fermat_theorem(std::uint64_t j) {
  return j == 1 ? Theorem::fermat : Theorem::fermat_prime_power;
}

// Direct summation shared by the direct route and the n = 1, 2 cases of the
// Burnside route.
void sum_phi_over_divisors(std::uint64_t n, VerificationResult& result) {
  auto summands = nlohmann::ordered_json::array();
  std::uint64_t sum = 0;
  for (std::uint64_t d : divisors(n)) {
    const std::uint64_t phi = euler_phi(d);
    summands.push_back({{"d", d}, {"phi", phi}});
    sum += phi;
  }
  result.witness["summands"] = std::move(summands);
  result.witness["sum"] = sum;
  result.verified = sum == n;
}

}  // namespace

std::string to_string(Theorem theorem) {
  switch (theorem) {
    case Theorem::fermat: return "fermat";
    case Theorem::fermat_prime_power: return "fermat-prime-power";
    case Theorem::phi_sum: return "phi-sum";
  }
  return "unknown";
}

std::string to_string(Route route) {
  switch (route) {
    case Route::action: return "action";
    case Route::modular: return "modular";
    case Route::burnside_q1: return "burnside-q1";
    case Route::direct_sum: return "direct-sum";
  }
  return "unknown";
}

VerificationResult fermat_modular_check(const Count& a, std::uint64_t modulus, std::uint64_t j) {
  if (modulus < 2) throw UsageError("fermat: modulus must be >= 2");
  if (j == 0) throw UsageError("fermat: j must be >= 1");
  VerificationResult result;
  result.theorem = fermat_theorem(j);
  result.route = Route::modular;
  result.inputs = {{"a", a}, {"p", modulus}, {"j", j}};

  const Count exponent = power(modulus, j);
  const Count power_residue = mod_pow(a, exponent, modulus);
  const Count base_residue = residue(a, modulus);
  result.witness["exponent"] = exponent.str();
  result.witness["powerResidue"] = power_residue.str();
  result.witness["baseResidue"] = base_residue.str();
  result.witness["primeModulus"] = is_prime(modulus);
  result.witness["trivialCase"] = a == 0;
  result.verified = power_residue == base_residue;
  return result;
}

VerificationResult verify_fermat_modular(const Count& a, std::uint64_t p, std::uint64_t j) {
  if (!is_prime(p)) throw UsageError("fermat: p = " + std::to_string(p) + " is not prime");
  return fermat_modular_check(a, p, j);
}

VerificationResult verify_fermat_action(std::uint64_t a, std::uint64_t p, std::uint64_t j,
                                        FixedPointMode mode, std::uint64_t cap) {
  if (a == 0) throw UsageError("fermat: the action route needs a >= 1");
  const CongruenceReport report = class_equation_congruence(p, j, a, mode, cap);

  VerificationResult result;
  result.theorem = fermat_theorem(j);
  result.route = Route::action;
  result.inputs = {{"a", a}, {"p", p}, {"j", j}};
  result.witness["tupleLength"] = power(p, j).str();
  result.witness["setSize"] = report.set_size.str();
  result.witness["fixedSize"] = report.fixed_size.str();
  result.witness["setResidue"] = report.set_residue.str();
  result.witness["fixedResidue"] = report.fixed_residue.str();
  result.witness["mode"] = to_string(report.mode);
  result.witness["crossChecked"] = report.cross_checked;
  result.verified = report.congruent && report.fixed_size == a;
  return result;
}

VerificationResult verify_phi_sum_direct(std::uint64_t n) {
  if (n == 0) throw UsageError("phi-sum: n must be >= 1");
  VerificationResult result;
  result.theorem = Theorem::phi_sum;
  result.route = Route::direct_sum;
  result.inputs = {{"n", n}};
  sum_phi_over_divisors(n, result);
  return result;
}

VerificationResult verify_phi_sum_burnside(std::uint64_t n, std::uint64_t cap) {
  if (n == 0) throw UsageError("phi-sum: n must be >= 1");
  VerificationResult result;
  result.theorem = Theorem::phi_sum;
  result.route = Route::burnside_q1;
  result.inputs = {{"n", n}};

  if (n < 3) {
    // No regular n-gon; sum directly.
    result.witness["smallCase"] = true;
    sum_phi_over_divisors(n, result);
    return result;
  }

  const PermutationGroup group = dihedral(n);
  const OrbitReport general = burnside_orbit_count(group, 1);
  const Count enumerated = enumerate_orbits(group, 1, cap).size();
  if (general.orbit_count != enumerated) {
    throw InternalError("phi-sum: Burnside orbit count " + general.orbit_count.str() +
                        " disagrees with enumeration " + enumerated.str());
  }
  const Count& orbits = general.orbit_count;
  const Count flips = flip_fixed_sum(n, 1);
  const Count rotations = rotation_fixed_sum(n, 1);
  const Count two_n_r = Count(2 * n) * orbits;
  const Count phi_sum = two_n_r - flips;

  result.witness["smallCase"] = false;
  result.witness["orbitCount"] = orbits.str();
  result.witness["enumeratedOrbits"] = enumerated.str();
  result.witness["groupFixedSum"] = general.fixed_sum->str();
  result.witness["flipSum"] = flips.str();
  result.witness["rotationSum"] = rotations.str();
  result.witness["burnsideIdentity"] = flips + rotations == two_n_r;
  result.witness["sum"] = phi_sum.str();
  result.verified = flips == n && flips + rotations == two_n_r && phi_sum == n;
  return result;
}

}  // namespace burnside
