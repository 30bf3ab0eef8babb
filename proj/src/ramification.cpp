#include "conductor/ramification.hpp"

#include <numeric>
#include <string>

#include "conductor/numtheory.hpp"

namespace conductor::ramification {

Diagnostics validate(const RamFiltration& filt) {
  Diagnostics out;
  auto flag = [&out](std::string rule, std::string msg) {
    out.push_back({std::move(rule), std::move(msg)});
  };
  const auto& s = filt.sizes;
  if (s.empty()) {
    flag("EmptyFiltration", "no ramification groups given");
    return out;
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1) {
      flag("NonPositiveOrder", "|G_" + std::to_string(i) + "| < 1");
      return out;
    }
  }
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] > s[i - 1]) {
      flag("NotDecreasing", "|G_" + std::to_string(i) + "| exceeds |G_" +
                                std::to_string(i - 1) + "|");
    } else if (s[i - 1] % s[i] != 0) {
      flag("NotDivisible", "|G_" + std::to_string(i) + "| does not divide |G_" +
                               std::to_string(i - 1) + "|");
    }
  }
  const long wild = s.size() > 1 ? s[1] : 1;
  if (filt.p) {
    const long p = *filt.p;
    if (!is_prime(p)) {
      flag("BadCharacteristic", std::to_string(p) + " is not prime");
      return out;
    }
    long w = wild;
    while (w % p == 0) w /= p;
    if (w != 1) {
      flag("WildNotPGroup",
           "|G_1| = " + std::to_string(wild) + " is not a power of p");
    }
    if ((s[0] / std::max(wild, 1L)) % p == 0) {
      flag("TameQuotientNotPrimeToP", "p divides [G_0 : G_1]");
    }
  } else if (wild > 1 && !prime_power(wild)) {
    flag("MixedWildPrimes",
         "|G_1| = " + std::to_string(wild) + " is not a prime power");
  }
  return out;
}

namespace {

void require_valid(const RamFiltration& filt) {
  const auto diags = validate(filt);
  if (!diags.empty()) {
    throw Error(ErrorCode::kInvalidFiltration,
                "[" + diags.front().rule + "] " + diags.front().message);
  }
}

}  // namespace

SwanArtin swan_artin_rep(const RamFiltration& filt, const RepFixedDims& rep) {
  require_valid(filt);
  if (rep.fixed_dims.size() != filt.sizes.size()) {
    throw Error(ErrorCode::kInconsistentDims,
                std::to_string(rep.fixed_dims.size()) +
                    " fixed dimensions for a filtration of length " +
                    std::to_string(filt.sizes.size()));
  }
  if (rep.dim < 0) throw Error(ErrorCode::kInconsistentDims, "negative dim");
  for (std::size_t i = 0; i < rep.fixed_dims.size(); ++i) {
    const long f = rep.fixed_dims[i];
    if (f < 0 || f > rep.dim) {
      throw Error(ErrorCode::kInconsistentDims,
                  "dim V^{G_" + std::to_string(i) + "} out of range");
    }
    if (i > 0 && f < rep.fixed_dims[i - 1]) {
      throw Error(ErrorCode::kInconsistentDims,
                  "fixed dimensions must increase along the filtration");
    }
  }
  SwanArtin out;
  const long g0 = filt.inertia_order();
  for (std::size_t i = 1; i < filt.sizes.size(); ++i) {
    out.swan += Rational(filt.sizes[i] * (rep.dim - rep.fixed_dims[i]), g0);
  }
  out.artin = Rational(rep.dim - rep.fixed_dims[0]) + out.swan;
  return out;
}

SwanExtension swan_extension(const RamFiltration& filt) {
  require_valid(filt);
  SwanExtension out;
  for (std::size_t i = 1; i < filt.sizes.size(); ++i) out.sw += filt.sizes[i] - 1;
  out.different_exponent = filt.inertia_order() - 1 + out.sw;
  return out;
}

long p_cyclic_jump_swan(long p, long s) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::kPrecondition, std::to_string(p) + " is not prime");
  }
  if (s < 1) throw Error(ErrorCode::kPrecondition, "s must be positive");
  return (s - 1) * (p - 1);
}

RepFixedDims regular_representation(const RamFiltration& filt) {
  require_valid(filt);
  RepFixedDims rep;
  rep.dim = filt.inertia_order();
  for (long size : filt.sizes) rep.fixed_dims.push_back(rep.dim / size);
  return rep;
}

}  // namespace conductor::ramification
