#ifndef SBD_SEARCH_HPP
#define SBD_SEARCH_HPP

#include <vector>

#include "sbd/design.hpp"
#include "sbd/perm.hpp"

namespace sbd {

struct SearchLimits {
  long long max_nodes = 10'000'000;
  long long max_results = 100'000;
  double time_budget_seconds = 300.0;
};

// True iff every nonzero residue of Z_v occurs exactly lambda times among the
// ordered differences of the subset. ParamViolation when |subset|(|subset|-1)
// != lambda(v-1) or the residues are out of range.
bool is_difference_set(const std::vector<int>& subset, int v, int lambda);

struct DifferenceSetSearch {
  std::vector<std::vector<int>> sets;  // lexicographic
  long long nodes = 0;
  bool budget_exceeded = false;
};

// All k-subsets of Z_v that are (v,k,lambda) difference sets. Exceeding the
// budget is a reported outcome with partial results, never a silent cut.
DifferenceSetSearch search_difference_sets(int v, int k, int lambda,
                                           const SearchLimits& limits = {});

// Development: blocks are the v translates subset + i (mod v). The result is
// axiom-checked and carries the translation x -> x+1 as an automorphism.
Design develop(const std::vector<int>& subset, int v);

struct InvariantSearchResult {
  std::vector<Design> designs;  // canonically sorted
  long long nodes = 0;
  bool budget_exceeded = false;
};

// All symmetric (v,k,lambda) designs whose block set is invariant under the
// given group, up to exact block-set equality (no isomorph rejection).
// Candidate blocks are grouped into orbits under the induced k-subset action;
// depth-first selection over orbits keeps pair coverage <= lambda, pairwise
// block intersections = lambda and at most v blocks, and every leaf is
// re-verified by make_design.
InvariantSearchResult search_invariant_designs(const DesignParams& params,
                                               const GroupSpec& group,
                                               const SearchLimits& limits = {});

struct AutGroupResult {
  long long order = 0;
  std::vector<Perm> generators;  // close to a group of the stated order
  long long node_count = 0;
};

// Full automorphism group by backtracking over point images, pruning with
// block-incidence consistency. Throws BudgetExceeded; a partial order would
// be wrong, so there is no partial result here.
AutGroupResult automorphism_group(const Design& d, const SearchLimits& limits = {});

}  // namespace sbd

#endif
