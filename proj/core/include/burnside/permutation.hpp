#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace burnside {

/// A bijection on {0, ..., n-1}. images()[i] is the image of i.
class Permutation {
 public:
  /// Throws UsageError unless `images` is a bijection on 0..size-1 and
  /// non-empty.
  explicit Permutation(std::vector<std::size_t> images);

  std::size_t degree() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_.at(i); }
  std::span<const std::size_t> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

Permutation identity(std::size_t n);

/// (f * g)(i) = f(g(i)). Throws UsageError on degree mismatch.
Permutation compose(const Permutation& f, const Permutation& g);

Permutation inverse(const Permutation& g);

/// i -> (i + k) mod n. rotation(n, 1) is the generator a.
Permutation rotation(std::size_t n, std::uint64_t k);

/// b * a^k, where the base reflection b is i -> n-1-i. Requires n >= 3 and
/// k < n; the image of i is (n-1-i-k) mod n.
Permutation flip(std::size_t n, std::uint64_t k);

/// Number of cycles in the disjoint-cycle decomposition, fixed points
/// included as 1-cycles.
std::size_t cycle_count(const Permutation& g);

/// Cycle lengths in order of each cycle's smallest element.
std::vector<std::size_t> cycle_lengths(const Permutation& g);

/// Smallest m >= 1 with g^m = identity.
std::uint64_t order(const Permutation& g);

struct GroupElement {
  std::string label;
  Permutation permutation;
};

/// An explicitly enumerated finite permutation group. Element labels take the
/// forms "a^k" (rotations) and "b*a^k" (flips).
class PermutationGroup {
 public:
  PermutationGroup(std::size_t degree, std::vector<GroupElement> elements);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::span<const GroupElement> elements() const& noexcept { return elements_; }
  std::span<const GroupElement> elements() const&& = delete;

  bool contains(const Permutation& g) const;
  const Permutation& at(const std::string& label) const;

 private:
  std::size_t degree_;
  std::vector<GroupElement> elements_;
};

/// C_m acting on m positions by cyclic shift. Requires m >= 1.
PermutationGroup cyclic(std::size_t m);

/// D_n acting on the n edges of a regular n-gon: a^0..a^{n-1} followed by
/// b*a^0..b*a^{n-1}. Requires n >= 3.
PermutationGroup dihedral(std::size_t n);

std::string rotation_label(std::uint64_t k);
std::string flip_label(std::uint64_t k);

}  // namespace burnside
