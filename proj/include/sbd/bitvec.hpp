#ifndef SBD_BITVEC_HPP
#define SBD_BITVEC_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sbd {

// Bit set over {0..size-1}. Blocks and block-candidate masks are stored this
// way so that intersection sizes reduce to word AND plus popcount.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int nbits)
      : nbits_(nbits), words_((static_cast<std::size_t>(nbits) + 63) / 64, 0) {}

  int size() const { return nbits_; }

  bool test(int i) const {
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) {
    words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(int i) {
    words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool none() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  void and_with(const BitVec& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  }
  void or_with(const BitVec& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  }
  // this &= ~o
  void and_not_with(const BitVec& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  }

  bool is_subset_of(const BitVec& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  static int and_count(const BitVec& a, const BitVec& b) {
    int c = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      c += std::popcount(a.words_[i] & b.words_[i]);
    return c;
  }

  // Orders sets as sorted element lists, e.g. {1,4} < {2,3}; this is not the
  // numeric order of the underlying words.
  static bool lex_less(const BitVec& a, const BitVec& b) {
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
      std::uint64_t d = a.words_[w] ^ b.words_[w];
      if (d) {
        std::uint64_t low = d & (~d + 1);
        return (a.words_[w] & low) != 0;
      }
    }
    return false;
  }

  std::vector<int> bits() const {
    std::vector<int> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t x = words_[w];
      while (x) {
        out.push_back(static_cast<int>(w * 64) + std::countr_zero(x));
        x &= x - 1;
      }
    }
    return out;
  }

  int first_bit() const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w]) return static_cast<int>(w * 64) + std::countr_zero(words_[w]);
    return -1;
  }

  bool operator==(const BitVec& o) const {
    return nbits_ == o.nbits_ && words_ == o.words_;
  }
  bool operator!=(const BitVec& o) const { return !(*this == o); }

 private:
  int nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace sbd

#endif
