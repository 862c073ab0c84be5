#ifndef SBD_TESTS_ORACLES_HPP
#define SBD_TESTS_ORACLES_HPP

// Independent brute-force checkers used to compute expected values. These
// deliberately avoid the library's bit-vector and pruning code paths: sets
// of ints, quadratic loops, full enumeration.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using Block = std::set<int>;  // 0-based points

// The four axioms plus the k-subset requirement, checked by direct loops.
inline bool is_design(int v, int k, int lambda, const std::vector<Block>& blocks) {
  if (static_cast<int>(blocks.size()) != v) return false;
  for (const Block& b : blocks) {
    if (static_cast<int>(b.size()) != k) return false;
    for (int x : b)
      if (x < 0 || x >= v) return false;
  }
  for (int x = 0; x < v; ++x) {
    int deg = 0;
    for (const Block& b : blocks) deg += b.count(x);
    if (deg != k) return false;
  }
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      int meet = 0;
      for (int x : blocks[i]) meet += blocks[j].count(x);
      if (meet != lambda) return false;
    }
  for (int x = 0; x < v; ++x)
    for (int y = x + 1; y < v; ++y) {
      int c = 0;
      for (const Block& b : blocks) c += b.count(x) && b.count(y);
      if (c != lambda) return false;
    }
  return true;
}

inline bool is_difference_set(const std::vector<int>& d, int v, int lambda) {
  std::vector<int> count(v, 0);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      if (i != j) ++count[((d[i] - d[j]) % v + v) % v];
  for (int r = 1; r < v; ++r)
    if (count[r] != lambda) return false;
  return true;
}

// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return out;
  for (;;) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// Every (7,3,1) design as a sorted set of 3-subset bitmasks, found by testing
// all C(35,7) ways to pick 7 of the 35 candidate blocks. No pruning beyond
// early exit inside the per-candidate check.
inline std::set<std::vector<std::uint32_t>> all_fano_block_sets() {
  const int v = 7, k = 3, lambda = 1;
  std::vector<std::uint32_t> cand;
  for (const auto& c : combinations(v, k)) {
    std::uint32_t m = 0;
    for (int x : c) m |= 1u << x;
    cand.push_back(m);
  }
  const int n = static_cast<int>(cand.size());

  auto valid = [&](const std::vector<std::uint32_t>& bs) {
    for (int x = 0; x < v; ++x) {
      int deg = 0;
      for (std::uint32_t b : bs) deg += (b >> x) & 1u;
      if (deg != k) return false;
    }
    for (std::size_t i = 0; i < bs.size(); ++i)
      for (std::size_t j = i + 1; j < bs.size(); ++j)
        if (std::popcount(bs[i] & bs[j]) != lambda) return false;
    for (int x = 0; x < v; ++x)
      for (int y = x + 1; y < v; ++y) {
        int c = 0;
        std::uint32_t pair = (1u << x) | (1u << y);
        for (std::uint32_t b : bs) c += (b & pair) == pair;
        if (c != lambda) return false;
      }
    return true;
  };

  std::set<std::vector<std::uint32_t>> found;
  std::vector<std::uint32_t> pick(7);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          for (int e = d + 1; e < n; ++e)
            for (int f = e + 1; f < n; ++f)
              for (int g = f + 1; g < n; ++g) {
                pick = {cand[a], cand[b], cand[c], cand[d],
                        cand[e], cand[f], cand[g]};
                if (valid(pick)) found.insert(pick);
              }
  return found;
}

}  // namespace oracle

#endif
