#pragma once

#include <optional>
#include <vector>

#include "conductor/continued_fraction.hpp"
#include "conductor/linalg.hpp"
#include "conductor/rational.hpp"

namespace conductor::singularity {

// Exceptional configuration of a resolution of a normal surface
// singularity.
struct ResolutionDatum {
  std::vector<long> genera;
  SymMatrix intersection;
  // Geometric genus; required unless rational_flag is set.
  std::optional<long> p_g;
  bool rational_flag = false;
};

// Structural checks: matching sizes (kInconsistentDims), integral entries,
// off-diagonals >= 0, diagonals <= -1, connected, genera >= 0, p_g
// consistent with rational_flag (kInvalidResolution), negative definite
// (kNotNegativeDefinite).
void validate(const ResolutionDatum& datum);

// Number of edges of the dual graph minus V plus 1.
long first_betti(const ResolutionDatum& datum);

struct Discrepancy {
  RationalVector coeffs;
  Rational gamma_sq;
};

// Solves Gamma.E_i = 2 g_i - 2 - E_i^2 for Gamma = sum k_i E_i.
Discrepancy discrepancy_solve(const ResolutionDatum& datum);

struct MilnorNu {
  Rational mu;
  Rational nu;
  Rational gamma_sq;
  long b1 = 0;
  long V = 0;
};

// mu = 12 p_g + Gamma^2 - sum 2 g_i - b1 + V and nu = mu - 12 p_g.
MilnorNu milnor_nu(const ResolutionDatum& datum);

// Chain of rational curves with E_i^2 = -a_i.
ResolutionDatum chain_datum(const std::vector<long>& terms);

// Initial values of the auxiliary sequence P_{i+1} = a_i P_i - P_{i-1}.
enum class PConvention {
  kUnitStart,  // P_0 = 1, P_1 = 1
  kStandard,   // P_0 = 0, P_1 = 1
};

// P_0 .. P_{l+1} for the given expansion.
std::vector<long> p_sequence(const std::vector<long>& terms, PConvention conv);

// Discrepancy coefficients x_i - 1 (i = 1..l) with x_i = (P_i + r_i)/e.
RationalVector cyclic_discrepancy(const HJExpansion& hj, PConvention conv);

struct TameCyclic {
  HJExpansion hj;
  ResolutionDatum chain;
  Rational mu_closed;
  Rational mu_tilde;
  Rational mu_solver;
  RationalVector gamma_coeffs;
};

// mu = 3l - (1/[a_1..a_l] + sum a_i + 1/[a_l..a_1]) + 2(1 - 1/e) and
// mu~ = mu - 2(1 - 1/e). Throws kInternal if the closed form and the
// adjunction solver disagree.
TameCyclic tame_cyclic(long e, long r);

// 4 (e_P - 1 + sw) / e_P for e_P a prime power and sw >= 0.
Rational weak_wild_milnor(long e_p, long sw);

// Coefficients of the discrepancy divisor on the three-armed resolution
// of a p-cyclic weak wild quotient: a (-2)-chain D_2..D_alpha and the
// chains of p/r1 and p/r_minus1, all attached to E_0 = D_1.
struct PCyclicWildChart {
  long p = 0;
  long s = 0;
  long r1 = 0;
  long r_minus1 = 0;
  long alpha = 0;
  long lambda = 0;
  PConvention convention = PConvention::kStandard;
  HJExpansion positive;
  HJExpansion negative;
  // x_0, x_1, ..., x_l and x_0, x_{-1}, ..., x_{-m}.
  RationalVector x_positive;
  RationalVector x_negative;
  RationalVector k_positive;
  RationalVector k_negative;
  // y_2 .. y_alpha.
  RationalVector y;
  Rational mu_target;
  long sw_jump = 0;
  // The value of E_0^2 for which the adjunction equation on E_0 holds with
  // these coefficients (absent when x_0 = 0). The chart itself does not fix
  // E_0^2.
  std::optional<Rational> implied_node_self_intersection;
};

PCyclicWildChart p_cyclic_wild_chart(long p, long s, long r1, long r_minus1,
                                     PConvention conv = PConvention::kStandard);

// Resolution datum of the chart with E_0^2 set to its implied value, or
// nullopt if that value is not an integer <= -1. Ordering: E_0, D_2..D_alpha,
// E_1..E_l, E_{-1}..E_{-m}. Marked rational.
std::optional<ResolutionDatum> chart_resolution(const PCyclicWildChart& chart);

struct ChartProbe {
  long r1 = 0;
  long r_minus1 = 0;
  Rational node_self_intersection;
  bool realizable = false;
  // Only meaningful when realizable.
  bool coefficients_match = false;
  Rational mu_solver;
  bool mu_matches_target = false;
};

// Tries every residue pair and reports how the chart coefficients compare
// with the adjunction solver. Exploratory: the pairing between r1 and
// r_minus1 is not known, so nothing here is asserted.
std::vector<ChartProbe> chart_discovery(long p, long s);

}  // namespace conductor::singularity
