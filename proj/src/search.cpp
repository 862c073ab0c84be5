#include "sbd/search.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "sbd/errors.hpp"
#include "sbd/lemmas.hpp"

namespace sbd {

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
  long long max_nodes;
  double max_seconds;
  Clock::time_point start = Clock::now();
  long long nodes = 0;
  bool exceeded = false;

  explicit Budget(const SearchLimits& l)
      : max_nodes(l.max_nodes), max_seconds(l.time_budget_seconds) {}

  // Returns false once the budget is spent.
  bool tick() {
    if (exceeded) return false;
    ++nodes;
    if (nodes > max_nodes) {
      exceeded = true;
      return false;
    }
    if ((nodes & 0xfff) == 0 &&
        std::chrono::duration<double>(Clock::now() - start).count() > max_seconds) {
      exceeded = true;
      return false;
    }
    return true;
  }
};

// Lexicographic k-combination enumerator over {0..n-1}.
struct Combinations {
  int n, k;
  std::vector<int> idx;
  bool done = false;

  Combinations(int n_, int k_) : n(n_), k(k_), idx(k_) {
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k > n) done = true;
  }

  void next() {
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) {
      done = true;
      return;
    }
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
};

bool difference_multiset_ok(const std::vector<int>& subset, int v, int lambda) {
  std::vector<int> count(v, 0);
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (std::size_t j = 0; j < subset.size(); ++j) {
      if (i == j) continue;
      ++count[((subset[i] - subset[j]) % v + v) % v];
    }
  for (int r = 1; r < v; ++r)
    if (count[r] != lambda) return false;
  return true;
}

BitVec apply_perm_to_set(const BitVec& s, const Perm& p) {
  BitVec out(s.size());
  for (int x : s.bits()) out.set(p(x));
  return out;
}

}  // namespace

bool is_difference_set(const std::vector<int>& subset, int v, int lambda) {
  if (v < 2 || lambda < 0) throw ParamViolation("need v >= 2 and lambda >= 0");
  std::vector<bool> seen(v, false);
  for (int x : subset) {
    if (x < 0 || x >= v)
      throw ParamViolation("residue " + std::to_string(x) + " out of range 0.." +
                           std::to_string(v - 1));
    if (seen[x]) throw ParamViolation("residue " + std::to_string(x) + " repeated");
    seen[x] = true;
  }
  long long k = static_cast<long long>(subset.size());
  if (k * (k - 1) != static_cast<long long>(lambda) * (v - 1))
    throw ParamViolation("counting identity k(k-1) = lambda(v-1) fails: " +
                         std::to_string(k * (k - 1)) + " != " +
                         std::to_string(static_cast<long long>(lambda) * (v - 1)));
  return difference_multiset_ok(subset, v, lambda);
}

DifferenceSetSearch search_difference_sets(int v, int k, int lambda,
                                           const SearchLimits& limits) {
  validate_params(DesignParams{v, k, lambda});

  DifferenceSetSearch out;
  Budget budget(limits);
  for (Combinations c(v, k); !c.done; c.next()) {
    if (!budget.tick()) break;
    if (difference_multiset_ok(c.idx, v, lambda)) {
      out.sets.push_back(c.idx);
      if (static_cast<long long>(out.sets.size()) >= limits.max_results) {
        budget.exceeded = true;
        break;
      }
    }
  }
  out.nodes = budget.nodes;
  out.budget_exceeded = budget.exceeded;
  return out;
}

Design develop(const std::vector<int>& subset, int v) {
  long long k = static_cast<long long>(subset.size());
  long long lam_num = k * (k - 1);
  if (v < 2 || lam_num % (v - 1) != 0)
    throw NotDifferenceSet("size " + std::to_string(k) +
                           " admits no lambda over Z_" + std::to_string(v));
  int lambda = static_cast<int>(lam_num / (v - 1));
  try {
    if (!is_difference_set(subset, v, lambda))
      throw NotDifferenceSet("differences do not cover each residue exactly " +
                             std::to_string(lambda) + " times");
  } catch (const ParamViolation& e) {
    throw NotDifferenceSet(e.what());
  }

  std::vector<BitVec> blocks;
  blocks.reserve(v);
  for (int shift = 0; shift < v; ++shift) {
    BitVec b(v);
    for (int x : subset) b.set((x + shift) % v);
    blocks.push_back(std::move(b));
  }
  return make_design(DesignParams{v, static_cast<int>(k), lambda}, std::move(blocks));
}

InvariantSearchResult search_invariant_designs(const DesignParams& params,
                                               const GroupSpec& group,
                                               const SearchLimits& limits) {
  validate_params(params);
  if (group.degree != params.v)
    throw DegreeMismatch("group degree " + std::to_string(group.degree) +
                         " does not match v = " + std::to_string(params.v));

  const int v = params.v, k = params.k, lam = params.lambda;
  std::vector<Perm> closure = group_closure(group);

  struct Orbit {
    std::vector<BitVec> blocks;                 // sorted
    std::vector<std::pair<int, int>> pairs;     // covered point pairs, with multiplicity
  };

  Budget budget(limits);
  std::vector<Orbit> orbits;

  // Materialize one orbit per lexicographically minimal k-subset
  // representative, dropping orbits that are internally infeasible.
  for (Combinations c(v, k); !c.done && !budget.exceeded; c.next()) {
    if (!budget.tick()) break;
    BitVec rep(v);
    for (int x : c.idx) rep.set(x);

    std::set<std::vector<int>> seen;
    std::vector<BitVec> members;
    bool is_min = true;
    for (const Perm& g : closure) {
      BitVec img = apply_perm_to_set(rep, g);
      if (BitVec::lex_less(img, rep)) {
        is_min = false;
        break;
      }
      if (seen.insert(img.bits()).second) members.push_back(std::move(img));
    }
    if (!is_min) continue;
    if (static_cast<int>(members.size()) > v) continue;

    std::sort(members.begin(), members.end(), BitVec::lex_less);

    bool feasible = true;
    for (std::size_t i = 0; i < members.size() && feasible; ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (BitVec::and_count(members[i], members[j]) != lam) {
          feasible = false;
          break;
        }
    if (!feasible) continue;

    Orbit o;
    std::vector<int> cover(static_cast<std::size_t>(v) * v, 0);
    for (const BitVec& b : members) {
      std::vector<int> pts = b.bits();
      for (std::size_t i = 0; i < pts.size() && feasible; ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
          int idx = pts[i] * v + pts[j];
          if (++cover[idx] > lam) {
            feasible = false;
            break;
          }
          o.pairs.emplace_back(pts[i], pts[j]);
        }
    }
    if (!feasible) continue;
    o.blocks = std::move(members);
    orbits.push_back(std::move(o));
  }

  InvariantSearchResult out;
  std::vector<int> cover(static_cast<std::size_t>(v) * v, 0);
  std::vector<const BitVec*> chosen;
  chosen.reserve(v);

  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (budget.exceeded) return;
    if (static_cast<int>(chosen.size()) == v) {
      std::vector<BitVec> blocks;
      blocks.reserve(v);
      for (const BitVec* b : chosen) blocks.push_back(*b);
      out.designs.push_back(make_design(params, std::move(blocks)));
      if (static_cast<long long>(out.designs.size()) >= limits.max_results)
        budget.exceeded = true;
      return;
    }
    for (std::size_t i = from; i < orbits.size(); ++i) {
      if (!budget.tick()) return;
      const Orbit& o = orbits[i];
      if (static_cast<int>(chosen.size() + o.blocks.size()) > v) continue;

      // Pair coverage, incremented one occurrence at a time so repeated
      // pairs within the orbit count correctly; rolled back on violation.
      bool ok = true;
      std::size_t applied = 0;
      for (; applied < o.pairs.size(); ++applied) {
        int idx = o.pairs[applied].first * v + o.pairs[applied].second;
        if (cover[idx] + 1 > lam) {
          ok = false;
          break;
        }
        ++cover[idx];
      }
      if (!ok) {
        while (applied > 0) {
          --applied;
          --cover[o.pairs[applied].first * v + o.pairs[applied].second];
        }
        continue;
      }

      for (const BitVec& nb : o.blocks) {
        for (const BitVec* cb : chosen)
          if (BitVec::and_count(nb, *cb) != lam) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      if (ok) {
        std::size_t base = chosen.size();
        for (const BitVec& nb : o.blocks) chosen.push_back(&nb);
        self(self, i + 1);
        chosen.resize(base);
      }
      for (const auto& [x, y] : o.pairs) --cover[x * v + y];
      if (budget.exceeded) return;
    }
  };
  rec(rec, 0);

  std::sort(out.designs.begin(), out.designs.end(), [](const Design& a, const Design& b) {
    for (int i = 0; i < a.v(); ++i) {
      if (a.blocks()[i] == b.blocks()[i]) continue;
      return BitVec::lex_less(a.blocks()[i], b.blocks()[i]);
    }
    return false;
  });
  out.nodes = budget.nodes;
  out.budget_exceeded = budget.exceeded;
  return out;
}

namespace {

// Greedy generator extraction from a full element list.
std::vector<Perm> reduce_generators(int degree, std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  std::vector<Perm> gens;
  std::set<std::vector<int>> span{Perm(degree).images()};
  for (const Perm& e : elements) {
    if (span.count(e.images())) continue;
    gens.push_back(e);
    span.clear();
    for (const Perm& g : group_closure(GroupSpec{degree, gens},
                                       std::max<std::size_t>(elements.size(), 1)))
      span.insert(g.images());
  }
  return gens;
}

}  // namespace

AutGroupResult automorphism_group(const Design& d, const SearchLimits& limits) {
  const int v = d.v();
  Budget budget(limits);

  // candidates[b] = blocks the image of block b may still equal, given the
  // point images assigned so far. Assigning t -> x forces every block through
  // t to map onto a block through x, and every block missing t onto a block
  // missing x.
  std::vector<std::vector<BitVec>> cand_stack(v + 1, std::vector<BitVec>(v));
  {
    BitVec all(v);
    for (int b = 0; b < v; ++b) all.set(b);
    for (int b = 0; b < v; ++b) cand_stack[0][b] = all;
  }

  std::vector<int> images(v, -1);
  std::vector<bool> used(v, false);
  std::vector<Perm> found;

  auto rec = [&](auto&& self, int t) -> void {
    if (t == v) {
      Perm q = Perm::from_images(images);
      if (is_automorphism(d, q)) found.push_back(std::move(q));
      return;
    }
    for (int x = 0; x < v; ++x) {
      if (used[x]) continue;
      if (!budget.tick())
        throw BudgetExceeded("automorphism search exceeded " +
                             std::to_string(budget.max_nodes) + " nodes");
      bool ok = true;
      for (int b = 0; b < v; ++b) {
        BitVec c = cand_stack[t][b];
        if (d.blocks()[b].test(t))
          c.and_with(d.point_blocks_mask()[x]);
        else
          c.and_not_with(d.point_blocks_mask()[x]);
        if (c.none()) {
          ok = false;
          break;
        }
        cand_stack[t + 1][b] = std::move(c);
      }
      if (!ok) continue;
      used[x] = true;
      images[t] = x;
      self(self, t + 1);
      used[x] = false;
    }
    images[t] = -1;
  };
  rec(rec, 0);

  AutGroupResult out;
  out.order = static_cast<long long>(found.size());
  out.node_count = budget.nodes;
  out.generators = reduce_generators(v, found);

  if (out.order <= 20000) {
    std::vector<Perm> closure =
        group_closure(GroupSpec{v, out.generators},
                      static_cast<std::size_t>(std::max<long long>(out.order, 1)));
    if (static_cast<long long>(closure.size()) != out.order)
      throw Error("generator closure has order " + std::to_string(closure.size()) +
                  ", expected " + std::to_string(out.order));
  }
  return out;
}

}  // namespace sbd
