#include "burnside/counting.hpp"

#include "burnside/number_theory.hpp"

namespace burnside {

std::string to_string(CountMethod method) {
  switch (method) {
    case CountMethod::general_burnside: return "general-burnside";
    case CountMethod::closed_form: return "closed-form";
    case CountMethod::brute_force: return "brute-force";
  }
  return "unknown";
}

OrbitReport burnside_orbit_count(const PermutationGroup& group, std::uint64_t q) {
  if (q == 0) throw UsageError("burnside_orbit_count: q must be >= 1");
  OrbitReport report;
  report.n = group.degree();
  report.q = q;
  report.group_order = group.order();
  report.method = CountMethod::general_burnside;
  report.fixed_table = fixed_point_table(group, q);
  report.fixed_sum = report.fixed_table->total;
  report.orbit_count =
      exact_divide(*report.fixed_sum, report.group_order, "Burnside sum over |G|");
  return report;
}

Count rotation_fixed_sum(std::uint64_t n, std::uint64_t q) {
  if (n == 0) throw UsageError("rotation_fixed_sum: n must be >= 1");
  if (q == 0) throw UsageError("rotation_fixed_sum: q must be >= 1");
  Count sum = 0;
  // phi(d) rotations of order d, each with n/d cycles
  for (std::uint64_t d : divisors(n)) sum += Count(euler_phi(d)) * power(q, n / d);
  return sum;
}

Count flip_fixed_sum(std::uint64_t n, std::uint64_t q) {
  if (n < 3) throw UsageError("flip_fixed_sum: n must be >= 3");
  if (q == 0) throw UsageError("flip_fixed_sum: q must be >= 1");
  if (n % 2 == 1) return Count(n) * power(q, (n + 1) / 2);
  return Count(n / 2) * power(q, n / 2) * (Count(q) + 1);
}

OrbitReport closed_form_orbit_count(std::uint64_t n, std::uint64_t q) {
  if (n < 3) throw UsageError("closed_form_orbit_count: n must be >= 3");
  if (q == 0) throw UsageError("closed_form_orbit_count: q must be >= 1");
  OrbitReport report;
  report.n = n;
  report.q = q;
  report.group_order = 2 * n;
  report.method = CountMethod::closed_form;
  report.fixed_sum = flip_fixed_sum(n, q) + rotation_fixed_sum(n, q);
  report.orbit_count =
      exact_divide(*report.fixed_sum, report.group_order, "closed-form fixed sum over 2n");
  return report;
}

OrbitReport brute_force_orbit_count(std::uint64_t n, std::uint64_t q, std::uint64_t cap) {
  if (n < 3) throw UsageError("brute_force_orbit_count: n must be >= 3");
  if (q == 0) throw UsageError("brute_force_orbit_count: q must be >= 1");
  require_enumerable(n, q, cap);
  const PermutationGroup group = dihedral(n);
  OrbitReport report;
  report.n = n;
  report.q = q;
  report.group_order = group.order();
  report.method = CountMethod::brute_force;
  report.orbit_count = enumerate_orbits(group, q, cap).size();
  return report;
}

}  // namespace burnside
