#include "burnside/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "burnside/count.hpp"

namespace burnside {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  if (images_.empty()) throw UsageError("permutation: degree must be >= 1");
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t image : images_) {
    if (image >= images_.size() || seen[image]) {
      throw UsageError("permutation: images are not a bijection on 0..n-1");
    }
    seen[image] = true;
  }
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation identity(std::size_t n) {
  if (n == 0) throw UsageError("identity: n must be >= 1");
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return Permutation(std::move(images));
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.degree() != g.degree()) throw UsageError("compose: degree mismatch");
  std::vector<std::size_t> images(g.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = f(g(i));
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& g) {
  std::vector<std::size_t> images(g.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[g(i)] = i;
  return Permutation(std::move(images));
}

Permutation rotation(std::size_t n, std::uint64_t k) {
  if (n == 0) throw UsageError("rotation: n must be >= 1");
  const std::size_t shift = static_cast<std::size_t>(k % n);
  std::vector<std::size_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = (i + shift) % n;
  return Permutation(std::move(images));
}

Permutation flip(std::size_t n, std::uint64_t k) {
  if (n < 3) throw UsageError("flip: n must be >= 3");
  if (k >= n) throw UsageError("flip: k must be < n");
  std::vector<std::size_t> images(n);
  // (n - 1 - i - k) mod n, kept non-negative
  for (std::size_t i = 0; i < n; ++i) images[i] = (2 * n - 1 - i - k) % n;
  return Permutation(std::move(images));
}

std::vector<std::size_t> cycle_lengths(const Permutation& g) {
  std::vector<std::size_t> lengths;
  std::vector<bool> visited(g.degree(), false);
  for (std::size_t start = 0; start < g.degree(); ++start) {
    if (visited[start]) continue;
    std::size_t length = 0;
    for (std::size_t i = start; !visited[i]; i = g(i)) {
      visited[i] = true;
      ++length;
    }
    lengths.push_back(length);
  }
  return lengths;
}

std::size_t cycle_count(const Permutation& g) { return cycle_lengths(g).size(); }

std::uint64_t order(const Permutation& g) {
  std::uint64_t result = 1;
  for (std::size_t length : cycle_lengths(g)) result = std::lcm(result, std::uint64_t{length});
  return result;
}

std::string rotation_label(std::uint64_t k) { return "a^" + std::to_string(k); }
std::string flip_label(std::uint64_t k) { return "b*a^" + std::to_string(k); }

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<GroupElement> elements)
    : degree_(degree), elements_(std::move(elements)) {
  if (elements_.empty()) throw UsageError("group: no elements");
  bool has_identity = false;
  for (const auto& element : elements_) {
    if (element.permutation.degree() != degree_) throw UsageError("group: degree mismatch");
    has_identity = has_identity || element.permutation.is_identity();
  }
  if (!has_identity) throw UsageError("group: identity missing");
  std::unordered_set<std::string> labels;
  for (const auto& element : elements_) {
    if (!labels.insert(element.label).second) {
      throw UsageError("group: duplicate label " + element.label);
    }
  }
}

bool PermutationGroup::contains(const Permutation& g) const {
  return std::any_of(elements_.begin(), elements_.end(),
                     [&](const GroupElement& e) { return e.permutation == g; });
}

const Permutation& PermutationGroup::at(const std::string& label) const {
  for (const auto& element : elements_) {
    if (element.label == label) return element.permutation;
  }
  throw UsageError("group: no element labelled " + label);
}

PermutationGroup cyclic(std::size_t m) {
  if (m == 0) throw UsageError("cyclic: m must be >= 1");
  std::vector<GroupElement> elements;
  elements.reserve(m);
  for (std::size_t k = 0; k < m; ++k) elements.push_back({rotation_label(k), rotation(m, k)});
  return PermutationGroup(m, std::move(elements));
}

PermutationGroup dihedral(std::size_t n) {
  if (n < 3) throw UsageError("dihedral: n must be >= 3");
  std::vector<GroupElement> elements;
  elements.reserve(2 * n);
  for (std::size_t k = 0; k < n; ++k) elements.push_back({rotation_label(k), rotation(n, k)});
  for (std::size_t k = 0; k < n; ++k) elements.push_back({flip_label(k), flip(n, k)});
  return PermutationGroup(n, std::move(elements));
}

}  // namespace burnside
