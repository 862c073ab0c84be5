#ifndef SBD_ANALYZER_HPP
#define SBD_ANALYZER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sbd/design.hpp"
#include "sbd/fraction.hpp"

namespace sbd {

// A fixed-count fact about automorphisms of a given order, either imported
// from the literature (external = true) or derived by the analyzer.
struct KnownFact {
  long long element_order = 0;
  long long fixed_count = 0;
  std::string source;
  bool external = false;
};

// One rule application. `f` is the fixed-point candidate the step concerns
// (absent for the global R1/R2 steps); `value` carries the decisive number
// where there is one (packing total for R4, required minimum for R5).
struct TraceStep {
  std::string rule;
  std::optional<long long> f;
  std::vector<long long> input;
  std::vector<long long> output;
  std::optional<long long> value;
  std::string note;
  bool operator==(const TraceStep&) const = default;
};

// Feasibility analysis of a hypothetical automorphism of prime order p.
//
// Rules, applied in order R1,R2,R3,R5,R6,R4 and iterated per candidate until
// stable (f = |F|, g = |F ^ B| for a fixed block B, n candidates below are
// exact integers):
//   R1  f = v (mod p) and f <= k + floor(sqrt(k - lambda))
//   R2  g = k (mod p) and lambda <= g <= k-1 (upper gate k when lambda <= 1)
//   R3  f >= min g              (F contains F ^ B, two fixed blocks exist)
//   R5  f >= 3*min g - 3*lambda + 2   (three fixed blocks through two common
//                                      fixed points; needs lambda >= 3)
//   R6  drop g when g + min g - lambda > f   (two-block union bound)
//   R4  f + f*(k - max g) <= v  (fixed blocks are pairwise disjoint off F)
// R2..R6 presuppose at least two fixed blocks and so only run for f >= 2;
// they all need lambda < p. Verdict is the surviving candidate set,
// contradiction when it is empty.
struct PrimeReport {
  DesignParams params;
  long long prime = 0;
  long long bound_max = 0;
  std::vector<long long> candidate_f;                  // R1 output
  std::optional<std::vector<long long>> g_base;        // R2 output
  std::map<long long, std::vector<long long>> g_sets;  // per surviving f >= 2
  std::vector<TraceStep> trace;
  std::vector<long long> survivors;
  std::map<std::string, std::string> inapplicable;     // rule -> reason
  bool contradiction() const { return survivors.empty(); }
};

// R1 alone: { f : 0 <= f <= bound, f = v (mod p) }.
std::vector<long long> feasible_fixed_counts(const DesignParams& params, long long p);

// R2 alone; HypothesisViolation when lambda >= p.
std::vector<long long> feasible_block_fixed_counts(const DesignParams& params,
                                                   long long p);

PrimeReport analyze_prime(const DesignParams& params, long long p);

// Order p^2 element: impossible when p^2 > v (no room for a p^2-cycle);
// otherwise its fixed count lies in { f <= fact.fixed_count, f = v (mod p) }
// since F(alpha) is contained in F(alpha^p) and cycle lengths are 1, p, p^2.
// Only e = 2 is supported.
struct PrimePowerReport {
  long long prime = 0;
  int exponent = 0;
  bool impossible = false;
  std::vector<long long> fixed_counts;
  std::string reason;
};
PrimePowerReport analyze_prime_power_element(long long v, long long p, int e,
                                             const KnownFact& fact);

// Orbit-count integrality for an elementary abelian group of order p^n whose
// p^n - 1 nonidentity elements each fix fix_counts.at(p) points:
// r = (v + (p^n - 1) * f) / p^n must be an integer for the action to exist.
struct IntegralityReport {
  long long v = 0;
  long long prime = 0;
  int exponent = 0;
  long long group_order = 0;
  long long nonidentity = 0;
  long long fixed_count = 0;
  Fraction r;
  bool possible = false;
};
IntegralityReport pgroup_integrality(long long v, long long p, int n,
                                     const std::map<long long, long long>& fix_counts);

// Commuting automorphisms of distinct prime orders p and q with known fixed
// counts: c = |F(alpha) ^ F(beta)| satisfies c = f_q (mod p), c = f_p (mod q)
// and c <= min(f_p, f_q). An empty candidate set refutes an element of order
// p*q. set_from_p / set_from_q are the one-sided congruence sets before the
// min cap.
struct CommutingPairReport {
  long long p = 0, q = 0;
  long long f_p = 0, f_q = 0;
  std::vector<long long> set_from_p;  // c = f_q (mod p), 0 <= c <= f_q
  std::vector<long long> set_from_q;  // c = f_p (mod q), 0 <= c <= f_p
  std::vector<long long> c_set;
  bool possible = false;
};
CommutingPairReport commuting_pair(long long v, long long p, long long q,
                                   long long f_p, long long f_q);

struct TheoremReport {
  DesignParams params;
  std::vector<long long> allowed_primes;
  // nullopt = unbounded by these methods.
  std::map<long long, std::optional<long long>> exponent_caps;
  // Largest elementary abelian 2-group order the integrality check allows;
  // nullopt when no order-2 fixed count is known. The matching abelian
  // 2-rank cap is log2 of it (a rank-(r+1) abelian group contains an
  // elementary abelian subgroup of order 2^(r+1)).
  std::optional<long long> elementary_abelian_2_cap;
  std::optional<int> abelian_2_rank_cap;
  std::vector<long long> forbidden_element_orders;
  std::map<long long, std::string> prime_exclusions;  // prime -> reason
  std::vector<KnownFact> facts_used;                  // per-order fixed counts
  std::vector<std::string> depends_on_external;       // conclusions using axioms
  std::vector<std::string> notes;
};

// Assembles the per-prime analyses, p-group integrality checks and commuting
// pair refutations into one report. Facts supply fixed counts that are not
// derivable here (for (81,16,3): an order-2 automorphism fixes 9 points).
TheoremReport full_report(const DesignParams& params,
                          const std::vector<KnownFact>& facts);

// The external facts this library ships: the order-2 fixed count for
// (81,16,3), cited to Marangunic. Empty for other parameters.
std::vector<KnownFact> standard_facts(const DesignParams& params);

}  // namespace sbd

#endif
