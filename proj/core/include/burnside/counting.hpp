#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "burnside/action.hpp"
#include "burnside/count.hpp"
#include "burnside/permutation.hpp"

namespace burnside {

enum class CountMethod { general_burnside, closed_form, brute_force };

std::string to_string(CountMethod method);

struct OrbitReport {
  std::size_t n = 0;
  std::uint64_t q = 0;
  std::uint64_t group_order = 0;
  /// Per-element fixed counts; only the general evaluation has them.
  std::optional<FixedPointTable> fixed_table;
  /// Absent for brute force, which never sums fixed points.
  std::optional<Count> fixed_sum;
  Count orbit_count;
  CountMethod method = CountMethod::general_burnside;
};

/// r = (sum over g of q^cycles(g)) / |G|, element by element.
OrbitReport burnside_orbit_count(const PermutationGroup& group, std::uint64_t q);

/// Sum of |S^g| over the n rotations, grouped by subgroup order:
/// sum over d | n of phi(d) q^(n/d). Uses number theory only.
Count rotation_fixed_sum(std::uint64_t n, std::uint64_t q);

/// Sum of |S^g| over the n flips of D_n:
///   n odd:  n q^((n+1)/2)
///   n even: (n/2) q^(n/2) (q+1)
Count flip_fixed_sum(std::uint64_t n, std::uint64_t q);

/// Bracelet count (flip_fixed_sum + rotation_fixed_sum) / 2n for n >= 3.
OrbitReport closed_form_orbit_count(std::uint64_t n, std::uint64_t q);

/// Orbit count of D_n by canonical-form enumeration.
OrbitReport brute_force_orbit_count(std::uint64_t n, std::uint64_t q,
                                    std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace burnside
