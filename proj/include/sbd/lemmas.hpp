#ifndef SBD_LEMMAS_HPP
#define SBD_LEMMAS_HPP

#include <string>
#include <vector>

#include "sbd/design.hpp"
#include "sbd/perm.hpp"

namespace sbd {

// Fixed points F(alpha) and fixed blocks F_b(alpha) of an automorphism.
// For any automorphism of a nontrivial symmetric design the two sets have
// equal size; fixed_structure relies on that only in tests, not here.
struct FixedData {
  std::vector<int> fixed_points;   // 0-based point ids
  std::vector<int> fixed_blocks;   // canonical block ids
};

bool is_automorphism(const Design& d, const Perm& p);

// Induced permutation on canonical block ids; NotAutomorphism otherwise.
Perm block_action(const Design& d, const Perm& p);

FixedData fixed_structure(const Design& d, const Perm& p);

// Largest integer f with f <= k or (f-k)^2 <= k-lambda, i.e. the integer
// form of the fixed-point bound k + sqrt(n). Pure integer arithmetic.
long long fixed_bound_max(const DesignParams& p);

enum class PrimeAdmissibility { admissible, excluded, rule_inapplicable };

// Prime bound: an automorphism prime p with gcd(p,v)=1 and 1 < lambda < p
// forces p <= k. Returns rule_inapplicable when the hypotheses fail.
PrimeAdmissibility prime_admissible(const DesignParams& params, long long p);

struct LemmaEntry {
  std::string id;
  bool applicable = false;
  bool holds = false;
  std::string witness;  // filled on failure
};

struct LemmaReport {
  std::vector<LemmaEntry> entries;
  bool all_applicable_hold() const {
    for (const auto& e : entries)
      if (e.applicable && !e.holds) return false;
    return true;
  }
  const LemmaEntry* find(const std::string& id) const {
    for (const auto& e : entries)
      if (e.id == id) return &e;
    return nullptr;
  }
};

// Evaluates the fixed-structure predicates for an automorphism of prime
// order. Entry ids:
//   fixed-count-equality            |F| = |F_b|
//   fixed-point-bound               |F| <= k + sqrt(n)
//   two-fixed-points-fix-block      |F ^ B| >= 2 forces B fixed   (lambda < p)
//   fixed-blocks-meet-in-fixed-set  B1 ^ B2 inside F              (lambda < p)
//   fixed-block-packing             |F| + sum |B \ F| <= v        (lambda < p)
//   no-block-inside-fixed-set       no block inside F             (1 < lambda < p)
// Applicability is reported explicitly instead of silently skipping, since
// the hypotheses vary per entry.
LemmaReport lemma_suite(const Design& d, const Perm& p, long long prime);

}  // namespace sbd

#endif
