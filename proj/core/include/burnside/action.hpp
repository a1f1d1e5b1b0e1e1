#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "burnside/count.hpp"
#include "burnside/permutation.hpp"

namespace burnside {

using Color = std::uint64_t;

/// A length-n word over the palette {0, ..., q-1}: one coloring of the n
/// edges, or one tuple (a_1, ..., a_n) of A^n with q = |A|.
class Coloring {
 public:
  /// Throws UsageError if the palette is empty or a cell is out of range.
  Coloring(std::vector<Color> cells, std::uint64_t palette_size);

  static Coloring constant(std::size_t length, Color color, std::uint64_t palette_size);

  std::size_t size() const noexcept { return cells_.size(); }
  std::uint64_t palette_size() const noexcept { return palette_size_; }
  std::span<const Color> cells() const noexcept { return cells_; }
  Color operator[](std::size_t i) const { return cells_.at(i); }

  bool is_constant() const noexcept;

  friend bool operator==(const Coloring&, const Coloring&) = default;
  /// Lexicographic on cells; the palette only breaks ties.
  friend auto operator<=>(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Color> cells_;
  std::uint64_t palette_size_;
};

/// Left action on positions: result[g(i)] = s[i]. Throws UsageError on a
/// length mismatch.
Coloring apply(const Permutation& g, const Coloring& s);

/// |S^g| = q^(cycles of g). Throws UsageError for q = 0.
Count fixed_count(const Permutation& g, std::uint64_t q);

/// Number of colorings in the full space, q^n.
Count space_size(std::size_t n, std::uint64_t q);

/// Throws CapExceeded if q^n > cap, UsageError if q = 0.
void require_enumerable(std::size_t n, std::uint64_t q, std::uint64_t cap);

/// Every coloring fixed by g, found by scanning the space in lexicographic
/// order.
std::vector<Coloring> enumerate_fixed(const Permutation& g, std::uint64_t q,
                                      std::uint64_t cap = kDefaultEnumerationCap);

/// S^G: colorings fixed by every element of the group.
std::vector<Coloring> group_fixed_points(const PermutationGroup& group, std::uint64_t q,
                                         std::uint64_t cap = kDefaultEnumerationCap);

/// Lexicographically smallest image of s under the group.
Coloring canonical_form(const PermutationGroup& group, const Coloring& s);

/// The orbit {g s}, sorted and deduplicated.
std::vector<Coloring> orbit(const PermutationGroup& group, const Coloring& s);

/// One canonical representative per orbit, sorted. The length of the result
/// is the exact orbit count.
std::vector<Coloring> enumerate_orbits(const PermutationGroup& group, std::uint64_t q,
                                       std::uint64_t cap = kDefaultEnumerationCap);

/// Right-hand side of r |G| = sum |S^g|, itemised per element.
struct FixedPointTable {
  struct Entry {
    std::string element_label;
    Count fixed_count;
  };
  std::vector<Entry> entries;
  Count total;
};

FixedPointTable fixed_point_table(const PermutationGroup& group, std::uint64_t q);

enum class FixedPointMode {
  automatic,   // enumerate when within the cap, otherwise analytic
  enumerated,  // scan the whole space; CapExceeded if too large
  analytic,    // |S^G| = q, the constant tuples
};

std::string to_string(FixedPointMode mode);

/// |S| against |S^G| mod p for C_{p^j} shifting the positions of q-ary
/// tuples of length p^j.
struct CongruenceReport {
  std::uint64_t p = 0;
  std::uint64_t j = 0;
  std::uint64_t q = 0;
  Count set_size;
  Count fixed_size;
  Count set_residue;
  Count fixed_residue;
  bool congruent = false;
  FixedPointMode mode = FixedPointMode::analytic;
  /// Enumeration ran and its |S^G| matched the analytic count q.
  bool cross_checked = false;
};

/// Throws UsageError unless p is prime, j >= 1 and q >= 1.
CongruenceReport class_equation_congruence(std::uint64_t p, std::uint64_t j, std::uint64_t q,
                                           FixedPointMode mode = FixedPointMode::automatic,
                                           std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace burnside
