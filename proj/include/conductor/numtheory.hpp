#pragma once

#include <optional>
#include <utility>

namespace conductor {

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// (p, m) with n = p^m, m >= 1, or nullopt when n is not a prime power.
inline std::optional<std::pair<long, long>> prime_power(long n) {
  if (n < 2) return std::nullopt;
  long p = 2;
  while (n % p != 0) ++p;
  long m = 0;
  while (n % p == 0) {
    n /= p;
    ++m;
  }
  if (n != 1) return std::nullopt;
  return std::pair{p, m};
}

inline long ipow(long base, long exp) {
  long out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

}  // namespace conductor
