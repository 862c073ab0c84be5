#ifndef SBD_FRACTION_HPP
#define SBD_FRACTION_HPP

#include <numeric>
#include <string>

#include "sbd/errors.hpp"

namespace sbd {

// Exact rational with reduced representation and positive denominator.
// All group-counting arguments in this library are integrality arguments,
// so no floating point is allowed anywhere near them.
struct Fraction {
  long long num = 0;
  long long den = 1;

  static Fraction of(long long n, long long d) {
    if (d == 0) throw Error("fraction with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return Fraction{n, d};
  }

  bool integral() const { return den == 1; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  bool operator==(const Fraction&) const = default;
};

}  // namespace sbd

#endif
