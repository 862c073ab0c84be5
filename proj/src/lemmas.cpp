#include "sbd/lemmas.hpp"

#include <numeric>

#include "sbd/errors.hpp"
#include "sbd/numtheory.hpp"

namespace sbd {

namespace {

BitVec permute_block(const BitVec& b, const Perm& p) {
  BitVec out(b.size());
  for (int x : b.bits()) out.set(p(x));
  return out;
}

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

bool is_automorphism(const Design& d, const Perm& p) {
  if (p.degree() != d.v())
    throw DegreeMismatch("permutation degree " + std::to_string(p.degree()) +
                         " does not match v = " + std::to_string(d.v()));
  for (const BitVec& b : d.blocks())
    if (d.find_block(permute_block(b, p)) < 0) return false;
  return true;
}

Perm block_action(const Design& d, const Perm& p) {
  if (p.degree() != d.v())
    throw DegreeMismatch("permutation degree " + std::to_string(p.degree()) +
                         " does not match v = " + std::to_string(d.v()));
  std::vector<int> images(d.v());
  for (int b = 0; b < d.v(); ++b) {
    int target = d.find_block(permute_block(d.blocks()[b], p));
    if (target < 0)
      throw NotAutomorphism("image of block " + block_str(d.blocks()[b]) +
                            " is not a block");
    images[b] = target;
  }
  return Perm::from_images(std::move(images));
}

FixedData fixed_structure(const Design& d, const Perm& p) {
  Perm on_blocks = block_action(d, p);  // throws NotAutomorphism
  FixedData f;
  for (int x = 0; x < d.v(); ++x)
    if (p(x) == x) f.fixed_points.push_back(x);
  for (int b = 0; b < d.v(); ++b)
    if (on_blocks(b) == b) f.fixed_blocks.push_back(b);
  return f;
}

long long fixed_bound_max(const DesignParams& p) {
  if (p.k <= p.lambda)
    throw ParamViolation("fixed-point bound needs k > lambda, got k = " +
                         std::to_string(p.k) + ", lambda = " +
                         std::to_string(p.lambda));
  return p.k + isqrt_floor(p.k - p.lambda);
}

PrimeAdmissibility prime_admissible(const DesignParams& params, long long p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (std::gcd(static_cast<long long>(params.v), p) != 1 || params.lambda <= 1 ||
      params.lambda >= p)
    return PrimeAdmissibility::rule_inapplicable;
  return p > params.k ? PrimeAdmissibility::excluded : PrimeAdmissibility::admissible;
}

LemmaReport lemma_suite(const Design& d, const Perm& p, long long prime) {
  if (!is_prime(prime))
    throw NotPrimeOrder("order " + std::to_string(prime) + " is not prime");
  if (perm_order(p) != prime)
    throw NotPrimeOrder("permutation has order " + std::to_string(perm_order(p)) +
                        ", expected " + std::to_string(prime));

  FixedData fd = fixed_structure(d, p);  // throws NotAutomorphism

  const long long lam = d.lambda();
  const bool base = lam < prime;

  BitVec fixed(d.v());
  for (int x : fd.fixed_points) fixed.set(x);

  LemmaReport rep;

  {
    LemmaEntry e{"fixed-count-equality", true, true, ""};
    if (fd.fixed_points.size() != fd.fixed_blocks.size()) {
      e.holds = false;
      e.witness = "|F| = " + std::to_string(fd.fixed_points.size()) +
                  ", |F_b| = " + std::to_string(fd.fixed_blocks.size());
    }
    rep.entries.push_back(e);
  }

  {
    LemmaEntry e{"fixed-point-bound", true, true, ""};
    long long bound = fixed_bound_max(d.params());
    if (static_cast<long long>(fd.fixed_points.size()) > bound) {
      e.holds = false;
      e.witness = "|F| = " + std::to_string(fd.fixed_points.size()) + " > " +
                  std::to_string(bound);
    }
    rep.entries.push_back(e);
  }

  {
    LemmaEntry e{"two-fixed-points-fix-block", base, true, ""};
    if (base) {
      Perm on_blocks = block_action(d, p);
      for (int b = 0; b < d.v(); ++b) {
        if (BitVec::and_count(d.blocks()[b], fixed) >= 2 && on_blocks(b) != b) {
          e.holds = false;
          e.witness = "block " + block_str(d.blocks()[b]) +
                      " contains >= 2 fixed points but is not fixed";
          break;
        }
      }
    }
    rep.entries.push_back(e);
  }

  {
    LemmaEntry e{"fixed-blocks-meet-in-fixed-set", base, true, ""};
    if (base) {
      for (std::size_t i = 0; i < fd.fixed_blocks.size() && e.holds; ++i)
        for (std::size_t j = i + 1; j < fd.fixed_blocks.size(); ++j) {
          const BitVec& b1 = d.blocks()[fd.fixed_blocks[i]];
          const BitVec& b2 = d.blocks()[fd.fixed_blocks[j]];
          BitVec meet = b1;
          meet.and_with(b2);
          if (!meet.is_subset_of(fixed)) {
            BitVec outside = meet;
            outside.and_not_with(fixed);
            e.holds = false;
            e.witness = "blocks " + block_str(b1) + " and " + block_str(b2) +
                        " share non-fixed point " +
                        std::to_string(outside.first_bit() + 1);
            break;
          }
        }
    }
    rep.entries.push_back(e);
  }

  {
    LemmaEntry e{"fixed-block-packing", base, true, ""};
    if (base) {
      long long total = static_cast<long long>(fd.fixed_points.size());
      for (int b : fd.fixed_blocks)
        total += d.k() - BitVec::and_count(d.blocks()[b], fixed);
      if (total > d.v()) {
        e.holds = false;
        e.witness = "|F| + sum |B \\ F| = " + std::to_string(total) + " > v = " +
                    std::to_string(d.v());
      }
    }
    rep.entries.push_back(e);
  }

  {
    LemmaEntry e{"no-block-inside-fixed-set", lam > 1 && base, true, ""};
    if (e.applicable) {
      for (const BitVec& b : d.blocks())
        if (b.is_subset_of(fixed)) {
          e.holds = false;
          e.witness = "block " + block_str(b) + " lies inside the fixed set";
          break;
        }
    }
    rep.entries.push_back(e);
  }

  return rep;
}

}  // namespace sbd
