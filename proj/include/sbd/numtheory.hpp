#ifndef SBD_NUMTHEORY_HPP
#define SBD_NUMTHEORY_HPP

#include <vector>

#include "sbd/errors.hpp"

namespace sbd {

// floor(sqrt(n)) in integer arithmetic only.
inline long long isqrt_floor(long long n) {
  if (n < 0) throw Error("isqrt of negative value");
  if (n < 2) return n;
  long long x = n, y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

inline bool is_prime(long long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<long long> primes_up_to(long long n) {
  std::vector<long long> out;
  for (long long p = 2; p <= n; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

// p^e with an overflow guard; inputs here are tiny but the guard keeps the
// integrality checks honest for arbitrary CLI arguments.
inline long long ipow_checked(long long p, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > (1LL << 62) / p) throw Error("power overflows 63-bit range");
    r *= p;
  }
  return r;
}

}  // namespace sbd

#endif
