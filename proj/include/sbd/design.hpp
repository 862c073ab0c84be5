#ifndef SBD_DESIGN_HPP
#define SBD_DESIGN_HPP

#include <string>
#include <string_view>
#include <vector>

#include "sbd/bitvec.hpp"

namespace sbd {

// Parameter triple (v, k, lambda); n = k - lambda is the order of the design.
struct DesignParams {
  int v = 0;
  int k = 0;
  int lambda = 0;
  int order() const { return k - lambda; }
  bool operator==(const DesignParams&) const = default;
};

// Throws ParamViolation unless v > k > lambda >= 0 and, when
// require_counting_identity is set, k(k-1) = lambda(v-1). The identity is
// not one of the four axioms but every valid parameter set satisfies it;
// the flag exists so deliberately odd parameters can still be probed.
void validate_params(const DesignParams& p, bool require_counting_identity = true);

// (v, v-k, v-2k+lambda); throws ParamViolation when inadmissible.
DesignParams complement_params(const DesignParams& p);

// A symmetric design: v blocks of size k over v points (0-based internally,
// 1-based in all text formats). Blocks are kept in set-lexicographic order,
// so two designs are equal iff their canonical block lists are equal.
// Immutable once built; safe to share across threads.
class Design {
 public:
  const DesignParams& params() const { return params_; }
  int v() const { return params_.v; }
  int k() const { return params_.k; }
  int lambda() const { return params_.lambda; }

  const std::vector<BitVec>& blocks() const { return blocks_; }

  // Blocks containing each point, ascending block ids. Redundant with
  // blocks() and rebuilt during construction; kept because point->block
  // walks dominate the search code.
  const std::vector<std::vector<int>>& point_index() const { return index_; }

  // point_index() as masks over block ids.
  const std::vector<BitVec>& point_blocks_mask() const { return index_mask_; }

  std::vector<int> block_points(int b) const { return blocks_[b].bits(); }

  // Canonical position of a block, -1 when absent.
  int find_block(const BitVec& bv) const;

  bool operator==(const Design& o) const {
    return params_ == o.params_ && blocks_ == o.blocks_;
  }

  friend Design make_design(const DesignParams& p, std::vector<BitVec> blocks);

 private:
  Design() = default;
  DesignParams params_;
  std::vector<BitVec> blocks_;
  std::vector<std::vector<int>> index_;
  std::vector<BitVec> index_mask_;
};

// Verifies the four axioms on an already sorted block list; throws
// AxiomViolation naming the first failure with a witness.
void check_axioms(const DesignParams& p, const std::vector<BitVec>& sorted_blocks);

// Builds a design from bit-vector blocks (any order; canonicalized here).
Design make_design(const DesignParams& p, std::vector<BitVec> blocks);

// Same, from 0-based point lists.
Design make_design(const DesignParams& p, const std::vector<std::vector<int>>& blocks);

Design complement(const Design& d);

// Text format: first data line "v k lambda", then one block per line as
// 1-based point labels; '#' starts a comment. Serialization is canonical
// (points sorted within blocks, blocks sorted lexicographically).
Design parse_design(std::string_view text);
std::string serialize_design(const Design& d);

}  // namespace sbd

#endif
