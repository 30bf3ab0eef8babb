#pragma once

#include <optional>
#include <vector>

#include "conductor/error.hpp"
#include "conductor/rational.hpp"

namespace conductor::ramification {

// Orders |G_0| >= |G_1| >= ... >= |G_N| of the lower ramification groups;
// |G_{N+1}| = 1 is implied.
struct RamFiltration {
  std::vector<long> sizes;
  // Residue characteristic, when known; enables the p-group checks.
  std::optional<long> p;

  long inertia_order() const { return sizes.front(); }
};

// Rule names: EmptyFiltration, NonPositiveOrder, NotDecreasing,
// NotDivisible, WildNotPGroup, TameQuotientNotPrimeToP, BadCharacteristic,
// MixedWildPrimes.
Diagnostics validate(const RamFiltration& filt);

// Dimensions of V and of the invariants V^{G_i}, aligned with the filtration.
struct RepFixedDims {
  long dim = 0;
  std::vector<long> fixed_dims;
};

struct SwanArtin {
  Rational swan;
  Rational artin;
};

// Sw = sum_{i>=1} (|G_i|/|G_0|) (dim - dim V^{G_i}),
// Art = dim - dim V^{G_0} + Sw. Throws kInconsistentDims or
// kInvalidFiltration.
SwanArtin swan_artin_rep(const RamFiltration& filt, const RepFixedDims& rep);

struct SwanExtension {
  long sw = 0;
  long different_exponent = 0;
};

// sw = sum_{i>=1} (|G_i| - 1), different exponent e - 1 + sw.
SwanExtension swan_extension(const RamFiltration& filt);

// (s - 1)(p - 1) for the jump parameter s of a p-cyclic weak wild chart.
long p_cyclic_jump_swan(long p, long s);

// Regular representation: dim |G_0|, fixed dims [G_0 : G_i].
RepFixedDims regular_representation(const RamFiltration& filt);

}  // namespace conductor::ramification
