#ifndef SBD_PERM_HPP
#define SBD_PERM_HPP

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sbd/fraction.hpp"

namespace sbd {

// Permutation of {0..degree-1} stored as an image table.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree) : images_(degree) {
    for (int i = 0; i < degree; ++i) images_[i] = i;
  }

  // Validates that images is a bijection (RangeError / RepeatError).
  static Perm from_images(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> images_;
};

// Disjoint-cycle text, 1-based: "(1 2 3)(4 5)". Empty or blank text is the
// identity. Canonical form puts the smallest element first in each cycle,
// sorts cycles by smallest element and omits fixed points, so the identity
// formats to the empty string.
Perm parse_cycles(std::string_view text, int degree);
std::string format_cycles(const Perm& p);

long long perm_order(const Perm& p);

// compose(a, b) applies a first: x -> b(a(x)).
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
Perm power(const Perm& p, long long m);

long long count_fixed_points(const Perm& p);

struct GroupSpec {
  int degree = 0;
  std::vector<Perm> generators;
};

// Orbit partition of {0..domain_size-1} under the generators; orbits are
// ascending and sorted by minimum element.
std::vector<std::vector<int>> orbits(const GroupSpec& g, int domain_size);

// Breadth-first closure of the generators, identity first, deduplicated.
// Throws CapExceeded once more than cap distinct elements appear. All groups
// this library meets are tiny; the cap guards against misuse.
std::vector<Perm> group_closure(const GroupSpec& g, std::size_t cap = 20000);

struct BurnsideResult {
  long long group_order = 0;
  long long fixed_sum = 0;
  Fraction orbit_count;
  bool is_integral = false;
};

// Cauchy-Frobenius count: orbit_count = (sum of fixed counts) / |elements|,
// held as an exact fraction. The callback supplies |F(alpha)| per element
// and may encode a hypothetical action; nullopt raises MissingFixCount.
// Callers are responsible for elements forming a group; set check_group to
// verify closure under composition.
BurnsideResult burnside(
    const std::vector<Perm>& elements,
    const std::function<std::optional<long long>(const Perm&)>& fix_count,
    bool check_group = false);

}  // namespace sbd

#endif
