#include "sbd/design.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "sbd/errors.hpp"

namespace sbd {

namespace {

std::string params_str(const DesignParams& p) {
  return "(" + std::to_string(p.v) + "," + std::to_string(p.k) + "," +
         std::to_string(p.lambda) + ")";
}

// 1-based rendering for witnesses.
std::string block_str(const BitVec& b) {
  std::string s = "{";
  bool first = true;
  for (int x : b.bits()) {
    if (!first) s += " ";
    s += std::to_string(x + 1);
    first = false;
  }
  return s + "}";
}

}  // namespace

void validate_params(const DesignParams& p, bool require_counting_identity) {
  if (!(p.v > p.k && p.k > p.lambda && p.lambda >= 0))
    throw ParamViolation("parameters " + params_str(p) +
                         " must satisfy v > k > lambda >= 0");
  if (require_counting_identity) {
    long long lhs = static_cast<long long>(p.k) * (p.k - 1);
    long long rhs = static_cast<long long>(p.lambda) * (p.v - 1);
    if (lhs != rhs)
      throw ParamViolation("parameters " + params_str(p) +
                           " fail k(k-1) = lambda(v-1): " + std::to_string(lhs) +
                           " != " + std::to_string(rhs));
  }
}

DesignParams complement_params(const DesignParams& p) {
  DesignParams c{p.v, p.v - p.k, p.v - 2 * p.k + p.lambda};
  if (!(c.v > c.k && c.k > c.lambda && c.lambda >= 0))
    throw ParamViolation("complement parameters " + params_str(c) + " of " +
                         params_str(p) + " are inadmissible");
  return c;
}

void check_axioms(const DesignParams& p, const std::vector<BitVec>& blocks) {
  // Definitional: every block is a k-subset of the point set.
  for (const BitVec& b : blocks) {
    int sz = b.count();
    if (sz != p.k)
      throw AxiomViolation(0, "block " + block_str(b) + " has " +
                                  std::to_string(sz) + " points, expected k = " +
                                  std::to_string(p.k));
  }

  // (1) exactly v blocks.
  if (static_cast<int>(blocks.size()) != p.v)
    throw AxiomViolation(1, std::to_string(blocks.size()) +
                                " blocks given, expected v = " +
                                std::to_string(p.v));

  // Duplicate blocks surface as an axiom-3 violation: the two copies are
  // distinct members of the block multiset and meet in k != lambda points.
  for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
    if (blocks[i] == blocks[i + 1])
      throw AxiomViolation(3, "duplicate block " + block_str(blocks[i]) +
                                  ": the pair meets in " + std::to_string(p.k) +
                                  " points, expected lambda = " +
                                  std::to_string(p.lambda));
  }

  // (2) every point lies in exactly k blocks.
  for (int x = 0; x < p.v; ++x) {
    int deg = 0;
    for (const BitVec& b : blocks) deg += b.test(x);
    if (deg != p.k)
      throw AxiomViolation(2, "point " + std::to_string(x + 1) + " lies in " +
                                  std::to_string(deg) + " blocks, expected k = " +
                                  std::to_string(p.k));
  }

  // (3) two distinct blocks meet in exactly lambda points.
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      int m = BitVec::and_count(blocks[i], blocks[j]);
      if (m != p.lambda)
        throw AxiomViolation(3, "blocks " + block_str(blocks[i]) + " and " +
                                    block_str(blocks[j]) + " meet in " +
                                    std::to_string(m) + " points, expected lambda = " +
                                    std::to_string(p.lambda));
    }

  // (4) two distinct points lie in exactly lambda common blocks.
  for (int x = 0; x < p.v; ++x)
    for (int y = x + 1; y < p.v; ++y) {
      int c = 0;
      for (const BitVec& b : blocks) c += b.test(x) && b.test(y);
      if (c != p.lambda)
        throw AxiomViolation(4, "points " + std::to_string(x + 1) + " and " +
                                    std::to_string(y + 1) + " lie in " +
                                    std::to_string(c) +
                                    " common blocks, expected lambda = " +
                                    std::to_string(p.lambda));
    }
}

Design make_design(const DesignParams& p, std::vector<BitVec> blocks) {
  validate_params(p);
  for (const BitVec& b : blocks)
    if (b.size() != p.v)
      throw ParamViolation("block bit width " + std::to_string(b.size()) +
                           " does not match v = " + std::to_string(p.v));

  std::sort(blocks.begin(), blocks.end(), BitVec::lex_less);
  check_axioms(p, blocks);

  Design d;
  d.params_ = p;
  d.blocks_ = std::move(blocks);
  d.index_.assign(p.v, {});
  d.index_mask_.assign(p.v, BitVec(p.v));
  for (int b = 0; b < p.v; ++b)
    for (int x : d.blocks_[b].bits()) {
      d.index_[x].push_back(b);
      d.index_mask_[x].set(b);
    }
  return d;
}

Design make_design(const DesignParams& p, const std::vector<std::vector<int>>& blocks) {
  validate_params(p);
  std::vector<BitVec> bvs;
  bvs.reserve(blocks.size());
  for (const auto& pts : blocks) {
    BitVec b(p.v);
    for (int x : pts) {
      if (x < 0 || x >= p.v)
        throw ParamViolation("point " + std::to_string(x + 1) +
                             " out of range 1.." + std::to_string(p.v));
      b.set(x);
    }
    bvs.push_back(std::move(b));
  }
  return make_design(p, std::move(bvs));
}

int Design::find_block(const BitVec& bv) const {
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), bv, BitVec::lex_less);
  if (it != blocks_.end() && *it == bv)
    return static_cast<int>(it - blocks_.begin());
  return -1;
}

Design complement(const Design& d) {
  DesignParams cp = complement_params(d.params());
  std::vector<BitVec> blocks;
  blocks.reserve(d.blocks().size());
  for (const BitVec& b : d.blocks()) {
    BitVec c(d.v());
    for (int x = 0; x < d.v(); ++x)
      if (!b.test(x)) c.set(x);
    blocks.push_back(std::move(c));
  }
  return make_design(cp, std::move(blocks));
}

Design parse_design(std::string_view text) {
  std::vector<std::vector<int>> rows;
  DesignParams p;
  bool have_header = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    if (std::size_t h = line.find('#'); h != std::string_view::npos)
      line = line.substr(0, h);

    std::vector<long long> nums;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(line[i])))
        throw ParseError(line_no, std::string("unexpected character '") + line[i] + "'");
      long long val = 0;
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
        val = val * 10 + (line[i] - '0');
        if (val > 1'000'000'000) throw ParseError(line_no, "number too large");
        ++i;
      }
      nums.push_back(val);
    }
    if (nums.empty()) continue;

    if (!have_header) {
      if (nums.size() != 3)
        throw ParseError(line_no, "header must be 'v k lambda'");
      p = DesignParams{static_cast<int>(nums[0]), static_cast<int>(nums[1]),
                       static_cast<int>(nums[2])};
      have_header = true;
      continue;
    }

    std::vector<int> row;
    for (long long x : nums) {
      if (x < 1 || x > p.v)
        throw ParseError(line_no, "point " + std::to_string(x) + " out of range 1.." +
                                      std::to_string(p.v));
      int z = static_cast<int>(x) - 1;
      if (std::find(row.begin(), row.end(), z) != row.end())
        throw ParseError(line_no, "point " + std::to_string(x) + " repeated in block");
      row.push_back(z);
    }
    rows.push_back(std::move(row));
  }

  if (!have_header) throw ParseError(line_no, "missing 'v k lambda' header");
  return make_design(p, rows);
}

std::string serialize_design(const Design& d) {
  std::ostringstream out;
  out << d.v() << " " << d.k() << " " << d.lambda() << "\n";
  for (const BitVec& b : d.blocks()) {
    bool first = true;
    for (int x : b.bits()) {
      if (!first) out << " ";
      out << x + 1;
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace sbd
