#include "conductor/continued_fraction.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "conductor/error.hpp"

namespace conductor {

HJExpansion hj_expand(long e, long r) {
  if (e < 2 || r <= 0 || r >= e || std::gcd(e, r) != 1) {
    throw Error(ErrorCode::kPrecondition,
                "hj_expand needs e >= 2, 0 < r < e, gcd(e,r) = 1; got (" +
                    std::to_string(e) + "," + std::to_string(r) + ")");
  }
  HJExpansion out;
  out.e = e;
  out.r = r;
  out.remainders.push_back(e);
  long prev = e;
  long cur = r;
  while (cur != 0) {
    out.remainders.push_back(cur);
    const long a = (prev + cur - 1) / cur;  // ceil(prev / cur)
    out.terms.push_back(a);
    const long next = a * cur - prev;
    prev = cur;
    cur = next;
  }
  return out;
}

Rational hj_eval(std::span<const long> terms) {
  if (terms.empty()) {
    throw Error(ErrorCode::kPrecondition, "hj_eval of an empty expansion");
  }
  for (long a : terms) {
    if (a < 2) {
      throw Error(ErrorCode::kPrecondition,
                  "continued fraction term " + std::to_string(a) + " < 2");
    }
  }
  Rational value(terms.back());
  for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it) {
    value = Rational(*it) - value.reciprocal();
  }
  return value;
}

long inverse_mod(long r, long e) {
  if (e < 2 || std::gcd(r, e) != 1) {
    throw Error(ErrorCode::kPrecondition, "inverse_mod needs gcd(r,e) = 1");
  }
  long old_r = ((r % e) + e) % e, cur_r = e;
  long old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    const long q = old_r / cur_r;
    old_r = std::exchange(cur_r, old_r - q * cur_r);
    old_s = std::exchange(cur_s, old_s - q * cur_s);
  }
  return ((old_s % e) + e) % e;
}

}  // namespace conductor
