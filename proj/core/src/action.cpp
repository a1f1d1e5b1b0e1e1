#include "burnside/action.hpp"

#include <algorithm>

#include "burnside/number_theory.hpp"

namespace burnside {
namespace {

// Advances cells as a base-q counter, last cell fastest, so successive words
// come out in lexicographic order. Returns false after the last word.
bool next_word(std::vector<Color>& cells, std::uint64_t q) {
  for (std::size_t i = cells.size(); i-- > 0;) {
    if (++cells[i] < q) return true;
    cells[i] = 0;
  }
  return false;
}

// Preimage tables: (g s)[j] = s[inv[j]].
std::vector<std::vector<std::size_t>> preimages(const PermutationGroup& group) {
  std::vector<std::vector<std::size_t>> tables;
  tables.reserve(group.order());
  for (const auto& element : group.elements()) {
    const Permutation inv = inverse(element.permutation);
    tables.emplace_back(inv.images().begin(), inv.images().end());
  }
  return tables;
}

bool fixed_by(std::span<const std::size_t> images, const std::vector<Color>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[images[i]] != cells[i]) return false;
  }
  return true;
}

// True when the image with preimage table `inv` is lexicographically
// smaller than cells.
bool image_is_smaller(const std::vector<std::size_t>& inv, const std::vector<Color>& cells) {
  for (std::size_t j = 0; j < cells.size(); ++j) {
    const Color moved = cells[inv[j]];
    if (moved != cells[j]) return moved < cells[j];
  }
  return false;
}

}  // namespace

Coloring::Coloring(std::vector<Color> cells, std::uint64_t palette_size)
    : cells_(std::move(cells)), palette_size_(palette_size) {
  if (palette_size_ == 0) throw UsageError("coloring: palette must be non-empty");
  for (Color c : cells_) {
    if (c >= palette_size_) throw UsageError("coloring: color outside palette");
  }
}

Coloring Coloring::constant(std::size_t length, Color color, std::uint64_t palette_size) {
  return Coloring(std::vector<Color>(length, color), palette_size);
}

bool Coloring::is_constant() const noexcept {
  return std::adjacent_find(cells_.begin(), cells_.end(), std::not_equal_to<>()) == cells_.end();
}

Coloring apply(const Permutation& g, const Coloring& s) {
  if (g.degree() != s.size()) throw UsageError("apply: permutation degree != coloring length");
  std::vector<Color> cells(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) cells[g(i)] = s[i];
  return Coloring(std::move(cells), s.palette_size());
}

Count fixed_count(const Permutation& g, std::uint64_t q) {
  if (q == 0) throw UsageError("fixed_count: q must be >= 1");
  return power(q, cycle_count(g));
}

Count space_size(std::size_t n, std::uint64_t q) { return power(q, n); }

void require_enumerable(std::size_t n, std::uint64_t q, std::uint64_t cap) {
  if (q == 0) throw UsageError("enumeration: q must be >= 1");
  if (n == 0) throw UsageError("enumeration: length must be >= 1");
  const Count size = space_size(n, q);
  if (size > cap) {
    throw CapExceeded("enumeration of " + size.str() + " colorings exceeds cap " +
                      std::to_string(cap));
  }
}

std::vector<Coloring> enumerate_fixed(const Permutation& g, std::uint64_t q, std::uint64_t cap) {
  require_enumerable(g.degree(), q, cap);
  std::vector<Coloring> fixed;
  std::vector<Color> cells(g.degree(), 0);
  do {
    if (fixed_by(g.images(), cells)) fixed.emplace_back(cells, q);
  } while (next_word(cells, q));
  return fixed;
}

std::vector<Coloring> group_fixed_points(const PermutationGroup& group, std::uint64_t q,
                                         std::uint64_t cap) {
  require_enumerable(group.degree(), q, cap);
  std::vector<Coloring> fixed;
  std::vector<Color> cells(group.degree(), 0);
  do {
    const bool all = std::all_of(
        group.elements().begin(), group.elements().end(),
        [&](const GroupElement& e) { return fixed_by(e.permutation.images(), cells); });
    if (all) fixed.emplace_back(cells, q);
  } while (next_word(cells, q));
  return fixed;
}

Coloring canonical_form(const PermutationGroup& group, const Coloring& s) {
  Coloring best = s;
  for (const auto& element : group.elements()) {
    Coloring image = apply(element.permutation, s);
    if (image < best) best = std::move(image);
  }
  return best;
}

std::vector<Coloring> orbit(const PermutationGroup& group, const Coloring& s) {
  std::vector<Coloring> images;
  images.reserve(group.order());
  for (const auto& element : group.elements()) images.push_back(apply(element.permutation, s));
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

std::vector<Coloring> enumerate_orbits(const PermutationGroup& group, std::uint64_t q,
                                       std::uint64_t cap) {
  require_enumerable(group.degree(), q, cap);
  const auto tables = preimages(group);
  std::vector<Coloring> representatives;
  std::vector<Color> cells(group.degree(), 0);
  do {
    const bool canonical = std::none_of(tables.begin(), tables.end(), [&](const auto& inv) {
      return image_is_smaller(inv, cells);
    });
    if (canonical) representatives.emplace_back(cells, q);
  } while (next_word(cells, q));
  return representatives;
}

FixedPointTable fixed_point_table(const PermutationGroup& group, std::uint64_t q) {
  if (q == 0) throw UsageError("fixed_point_table: q must be >= 1");
  FixedPointTable table;
  table.entries.reserve(group.order());
  for (const auto& element : group.elements()) {
    Count count = fixed_count(element.permutation, q);
    table.total += count;
    table.entries.push_back({element.label, std::move(count)});
  }
  return table;
}

std::string to_string(FixedPointMode mode) {
  switch (mode) {
    case FixedPointMode::automatic: return "automatic";
    case FixedPointMode::enumerated: return "enumerated";
    case FixedPointMode::analytic: return "analytic";
  }
  return "unknown";
}

namespace {

// Longest tuple the congruence check will reason about; |S| = q^(p^j) is
// held exactly, so the exponent itself has to stay modest.
constexpr std::uint64_t kMaxTupleLength = std::uint64_t{1} << 20;

}  // namespace

CongruenceReport class_equation_congruence(std::uint64_t p, std::uint64_t j, std::uint64_t q,
                                           FixedPointMode mode, std::uint64_t cap) {
  if (!is_prime(p)) throw UsageError("congruence: p = " + std::to_string(p) + " is not prime");
  if (j == 0) throw UsageError("congruence: j must be >= 1");
  if (q == 0) throw UsageError("congruence: q must be >= 1");

  const Count length = power(p, j);
  if (length > kMaxTupleLength) {
    throw CapExceeded("congruence: tuple length " + length.str() + " exceeds " +
                      std::to_string(kMaxTupleLength));
  }
  const auto m = static_cast<std::size_t>(length);

  CongruenceReport report;
  report.p = p;
  report.j = j;
  report.q = q;
  report.set_size = power(q, m);

  // Building C_m stores m permutations of degree m.
  const bool enumerable = report.set_size <= cap && Count(m) * m <= cap;
  if (mode == FixedPointMode::automatic) {
    mode = enumerable ? FixedPointMode::enumerated : FixedPointMode::analytic;
  }
  report.mode = mode;

  if (mode == FixedPointMode::enumerated) {
    if (!enumerable) {
      throw CapExceeded("congruence: enumerating " + report.set_size.str() +
                        " tuples under a group of order " + length.str() + " exceeds cap " +
                        std::to_string(cap));
    }
    const auto fixed = group_fixed_points(cyclic(m), q, cap);
    report.fixed_size = fixed.size();
    const bool all_constant =
        std::all_of(fixed.begin(), fixed.end(), [](const Coloring& c) { return c.is_constant(); });
    if (report.fixed_size != q || !all_constant) {
      throw InternalError("congruence: enumerated fixed points are not the " + std::to_string(q) +
                          " constant tuples");
    }
    report.cross_checked = true;
  } else {
    report.fixed_size = q;
  }

  report.set_residue = residue(report.set_size, p);
  report.fixed_residue = residue(report.fixed_size, p);
  report.congruent = report.set_residue == report.fixed_residue;
  return report;
}

}  // namespace burnside
