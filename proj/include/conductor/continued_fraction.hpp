#pragma once

#include <span>
#include <vector>

#include "conductor/rational.hpp"

namespace conductor {

// Jung-Hirzebruch (descending) expansion
//   e/r = a_1 - 1/(a_2 - 1/(... - 1/a_l)),  every a_i >= 2.
struct HJExpansion {
  long e = 0;
  long r = 0;
  std::vector<long> terms;
  // r_0 = e > r_1 = r > ... > r_l = 1, with r_{i+1} = a_i r_i - r_{i-1}.
  std::vector<long> remainders;

  std::size_t length() const { return terms.size(); }
};

// Requires e >= 2, 0 < r < e, gcd(e, r) = 1; throws kPrecondition otherwise.
HJExpansion hj_expand(long e, long r);

// Value of the descending continued fraction; throws on an empty list or a
// term below 2.
Rational hj_eval(std::span<const long> terms);

// Inverse of r modulo e, in (0, e). Requires gcd(e, r) = 1.
long inverse_mod(long r, long e);

}  // namespace conductor
