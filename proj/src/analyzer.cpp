#include "sbd/analyzer.hpp"

#include <algorithm>
#include <numeric>

#include "sbd/errors.hpp"
#include "sbd/lemmas.hpp"
#include "sbd/numtheory.hpp"

namespace sbd {

namespace {

void require_prime(long long p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
}

std::vector<long long> congruence_range(long long residue, long long mod,
                                        long long lo, long long hi) {
  std::vector<long long> out;
  long long start = residue % mod;
  if (start < lo) start += ((lo - start + mod - 1) / mod) * mod;
  for (long long x = start; x <= hi; x += mod) out.push_back(x);
  return out;
}

}  // namespace

std::vector<long long> feasible_fixed_counts(const DesignParams& params, long long p) {
  require_prime(p);
  long long bound = fixed_bound_max(params);
  return congruence_range(params.v, p, 0, bound);
}

std::vector<long long> feasible_block_fixed_counts(const DesignParams& params,
                                                   long long p) {
  require_prime(p);
  if (params.lambda >= p)
    throw HypothesisViolation("needs lambda < p, got lambda = " +
                              std::to_string(params.lambda) + ", p = " +
                              std::to_string(p));
  // Lower gate: two fixed blocks meet in exactly lambda points, all fixed.
  // Upper gate: no block lies inside F, which needs lambda > 1; with
  // lambda <= 1 a fully fixed block is possible and the gate is k.
  long long hi = params.lambda > 1 ? params.k - 1 : params.k;
  return congruence_range(params.k, p, params.lambda, hi);
}

PrimeReport analyze_prime(const DesignParams& params, long long p) {
  require_prime(p);
  validate_params(params);

  const long long v = params.v, k = params.k, lam = params.lambda;

  PrimeReport rep;
  rep.params = params;
  rep.prime = p;
  rep.bound_max = fixed_bound_max(params);
  rep.candidate_f = feasible_fixed_counts(params, p);
  rep.trace.push_back({"R1", std::nullopt, {}, rep.candidate_f, std::nullopt,
                       "f = v (mod p), 0 <= f <= " + std::to_string(rep.bound_max)});

  if (lam >= p) {
    const std::string why = "lambda >= p";
    for (const char* r : {"R2", "R3", "R4", "R5", "R6"}) rep.inapplicable[r] = why;
    rep.survivors = rep.candidate_f;
    return rep;
  }

  rep.g_base = feasible_block_fixed_counts(params, p);
  rep.trace.push_back({"R2", std::nullopt, {}, *rep.g_base, std::nullopt,
                       "g = k (mod p), " + std::to_string(lam) + " <= g <= " +
                           std::to_string(lam > 1 ? k - 1 : k)});
  if (lam < 3) rep.inapplicable["R5"] = "lambda < 3";

  for (long long f : rep.candidate_f) {
    if (f < 2) {
      // Fewer than two fixed blocks; R2..R6 have nothing to say.
      rep.survivors.push_back(f);
      continue;
    }

    std::vector<long long> gset = *rep.g_base;
    bool eliminated = false;

    if (gset.empty()) {
      rep.trace.push_back({"R2", f, {f}, {}, std::nullopt,
                           "no per-block count is feasible although f >= 2 "
                           "forces two fixed blocks"});
      eliminated = true;
    }

    while (!eliminated) {
      const long long gmin = gset.front();

      if (f < gmin) {
        rep.trace.push_back({"R3", f, {f}, {}, gmin,
                             "f < min g = " + std::to_string(gmin) +
                                 " although F contains F ^ B"});
        eliminated = true;
        break;
      }

      if (lam >= 3) {
        long long need = 3 * gmin - 3 * lam + 2;
        if (f < need) {
          rep.trace.push_back({"R5", f, {f}, {}, need,
                               "three-block union needs f >= 3*" +
                                   std::to_string(gmin) + " - 3*" +
                                   std::to_string(lam) + " + 2 = " +
                                   std::to_string(need)});
          eliminated = true;
          break;
        }
      }

      std::vector<long long> kept;
      for (long long g : gset)
        if (g + gmin - lam <= f) kept.push_back(g);
      bool changed = kept.size() != gset.size();
      if (changed) {
        rep.trace.push_back({"R6", f, gset, kept, std::nullopt,
                             "two fixed blocks cover g + min g - lambda fixed "
                             "points, which may not exceed f"});
        gset = kept;
        if (gset.empty()) {
          eliminated = true;
          break;
        }
      }

      const long long gmax = gset.back();
      long long packing = f + f * (k - gmax);
      if (packing > v) {
        rep.trace.push_back({"R4", f, {f}, {}, packing,
                             std::to_string(f) + " + " + std::to_string(f) + "*" +
                                 std::to_string(k - gmax) + " = " +
                                 std::to_string(packing) + " > v = " +
                                 std::to_string(v)});
        eliminated = true;
        break;
      }

      if (!changed) break;
    }

    if (!eliminated) {
      rep.survivors.push_back(f);
      rep.g_sets[f] = gset;
    }
  }

  return rep;
}

PrimePowerReport analyze_prime_power_element(long long v, long long p, int e,
                                             const KnownFact& fact) {
  require_prime(p);
  if (e != 2)
    throw UnsupportedExponent("only exponent 2 is supported, got " +
                              std::to_string(e));
  if (fact.element_order != p)
    throw MissingFact("need a fixed-count fact for order " + std::to_string(p) +
                      ", got order " + std::to_string(fact.element_order));

  PrimePowerReport rep;
  rep.prime = p;
  rep.exponent = e;
  if (p * p > v) {
    rep.impossible = true;
    rep.reason = "an element of order " + std::to_string(p * p) +
                 " needs a cycle of that length, but " + std::to_string(p * p) +
                 " > v = " + std::to_string(v);
    return rep;
  }

  // F(alpha) sits inside F(alpha^p) and is nonempty exactly when some count
  // below survives; cycle lengths 1, p, p^2 give f = v (mod p).
  rep.fixed_counts = congruence_range(v, p, 0, fact.fixed_count);
  if (rep.fixed_counts.empty()) {
    rep.impossible = true;
    rep.reason = "no fixed count <= " + std::to_string(fact.fixed_count) +
                 " is congruent to v (mod p)";
  }
  return rep;
}

IntegralityReport pgroup_integrality(long long v, long long p, int n,
                                     const std::map<long long, long long>& fix_counts) {
  require_prime(p);
  if (n < 1) throw Error("exponent must be >= 1");
  auto it = fix_counts.find(p);
  if (it == fix_counts.end())
    throw MissingFact("no fixed count for elements of order " + std::to_string(p));

  IntegralityReport rep;
  rep.v = v;
  rep.prime = p;
  rep.exponent = n;
  rep.group_order = ipow_checked(p, n);
  rep.nonidentity = rep.group_order - 1;
  rep.fixed_count = it->second;
  rep.r = Fraction::of(v + rep.nonidentity * rep.fixed_count, rep.group_order);
  rep.possible = rep.r.integral();
  return rep;
}

CommutingPairReport commuting_pair(long long v, long long p, long long q,
                                   long long f_p, long long f_q) {
  require_prime(p);
  require_prime(q);
  if (p == q) throw EqualPrimes("primes must be distinct, got " + std::to_string(p));
  if (f_p < 0 || f_q < 0 || f_p > v || f_q > v)
    throw ParamViolation("fixed counts must lie in 0..v");

  CommutingPairReport rep;
  rep.p = p;
  rep.q = q;
  rep.f_p = f_p;
  rep.f_q = f_q;
  rep.set_from_p = congruence_range(f_q, p, 0, f_q);
  rep.set_from_q = congruence_range(f_p, q, 0, f_p);
  long long cap = std::min(f_p, f_q);
  for (long long c : rep.set_from_p)
    if (c <= cap && (c - f_p) % q == 0) rep.c_set.push_back(c);
  rep.possible = !rep.c_set.empty();
  return rep;
}

std::vector<KnownFact> standard_facts(const DesignParams& params) {
  if (params == DesignParams{81, 16, 3})
    return {KnownFact{2, 9, "Marangunic", true}};
  return {};
}

TheoremReport full_report(const DesignParams& params,
                          const std::vector<KnownFact>& facts) {
  validate_params(params);

  TheoremReport rep;
  rep.params = params;

  std::map<long long, KnownFact> known;
  for (const KnownFact& f : facts) {
    if (f.fixed_count < 0) throw MissingFact("fixed count must be >= 0");
    known[f.element_order] = f;
  }

  // A prime-order automorphism moves points in p-cycles, so p <= v.
  for (long long p : primes_up_to(params.v)) {
    if (prime_admissible(params, p) == PrimeAdmissibility::excluded) {
      rep.prime_exclusions[p] =
          "prime bound: p > k with 1 < lambda < p and gcd(p, v) = 1 (Aschbacher)";
      continue;
    }
    PrimeReport pr = analyze_prime(params, p);
    if (pr.contradiction()) {
      rep.prime_exclusions[p] = "fixed-point analysis: no feasible |F|";
      continue;
    }
    rep.allowed_primes.push_back(p);
    if (!known.count(p) && pr.survivors.size() == 1)
      known[p] = KnownFact{p, pr.survivors[0], "fixed-point analysis", false};
  }

  // Exponent caps: order p^2 is refuted when every order-p^2 group would
  // consist of p^2 - 1 nonidentity elements all fixing the same number of
  // points and the orbit count fails integrality. That uniform count needs
  // either no order-p^2 element at all (the group is elementary abelian) or
  // a unique order-p^2 fixed count equal to the order-p one.
  for (long long p : rep.allowed_primes) {
    std::optional<long long> cap;
    if (known.count(p)) {
      const KnownFact& fact = known[p];
      PrimePowerReport pp = analyze_prime_power_element(params.v, p, 2, fact);
      bool uniform = pp.impossible || (pp.fixed_counts.size() == 1 &&
                                       pp.fixed_counts[0] == fact.fixed_count);
      if (uniform) {
        IntegralityReport ir =
            pgroup_integrality(params.v, p, 2, {{p, fact.fixed_count}});
        if (!ir.possible) {
          cap = 1;
          rep.notes.push_back("no subgroup of order " + std::to_string(p * p) +
                              ": r = " + ir.r.str() + " is not an integer" +
                              (pp.impossible ? " (order " + std::to_string(p * p) +
                                                   " elements already impossible)"
                                             : ""));
          if (fact.external)
            rep.depends_on_external.push_back("exponent cap for " + std::to_string(p));
          if (params == DesignParams{81, 16, 3} && p == 13)
            rep.notes.push_back(
                "an elementary abelian group of order 169 has 168 nonidentity "
                "elements (not 12); r = (81 + 168*3)/169 = 45/13, and the "
                "12-element variant 9/13 is likewise non-integral");
        }
      }
    }
    rep.exponent_caps[p] = cap;
  }

  // Elementary abelian 2-groups: with a known involution fixed count f, the
  // orbit count (v + (2^n - 1) f)/2^n is integral iff 2^n divides v - f.
  if (known.count(2)) {
    const KnownFact& fact = known[2];
    int n = 0;
    while (n < 62 &&
           pgroup_integrality(params.v, 2, n + 1, {{2, fact.fixed_count}}).possible)
      ++n;
    rep.elementary_abelian_2_cap = ipow_checked(2, n);
    rep.abelian_2_rank_cap = n;
    rep.notes.push_back(
        "elementary abelian 2-subgroups have order at most " +
        std::to_string(*rep.elementary_abelian_2_cap) +
        "; a rank-" + std::to_string(n + 1) +
        " abelian 2-group would contain an elementary abelian subgroup of order " +
        std::to_string(ipow_checked(2, n + 1)) + ", so abelian 2-rank <= " +
        std::to_string(n));
    if (fact.external) {
      rep.depends_on_external.push_back("elementary_abelian_2_cap");
      rep.depends_on_external.push_back("abelian_2_rank_cap");
    }
  } else {
    rep.notes.push_back(
        "no fixed-count fact for order 2: elementary abelian 2-bound unknown");
  }

  // Forbidden element orders: primes whose analysis is contradictory, plus
  // products p*q refuted by the commuting-pair congruences.
  std::vector<long long> forbidden;
  for (const auto& [p, reason] : rep.prime_exclusions)
    if (reason.rfind("fixed-point analysis", 0) == 0) forbidden.push_back(p);
  for (std::size_t i = 0; i < rep.allowed_primes.size(); ++i)
    for (std::size_t j = i + 1; j < rep.allowed_primes.size(); ++j) {
      long long p = rep.allowed_primes[i], q = rep.allowed_primes[j];
      if (!known.count(p) || !known.count(q)) continue;
      CommutingPairReport cp =
          commuting_pair(params.v, p, q, known[p].fixed_count, known[q].fixed_count);
      if (!cp.possible) {
        forbidden.push_back(p * q);
        rep.notes.push_back(
            "no element of order " + std::to_string(p * q) +
            ": |F(alpha) ^ F(beta)| has no value meeting both congruences");
        if (known[p].external || known[q].external)
          rep.depends_on_external.push_back("forbidden order " + std::to_string(p * q));
      }
    }
  std::sort(forbidden.begin(), forbidden.end());
  rep.forbidden_element_orders = std::move(forbidden);

  for (const auto& [order, fact] : known) rep.facts_used.push_back(fact);

  if (params.lambda <= 1)
    rep.notes.push_back(
        "lambda <= 1: the prime bound needs 1 < lambda and never applies; the "
        "per-block upper gate is k since a block may lie inside the fixed set");
  if (rep.exponent_caps.count(3) && !rep.exponent_caps[3]) {
    if (params.v % 3 == 0)
      rep.notes.push_back(
          "3 divides v, so only the congruence rule constrains order-3 "
          "automorphisms; the 3-exponent is unbounded by these methods");
  }
  if (params == DesignParams{81, 16, 3}) {
    rep.notes.push_back(
        "every group of order 65 is cyclic, so forbidding elements of order 65 "
        "forbids subgroups of order 65 (recorded, not computed)");
    rep.notes.push_back(
        "no abelian regular 3-group of automorphisms exists (Arasu); external "
        "result, recorded as a citation only");
  }

  return rep;
}

}  // namespace sbd
