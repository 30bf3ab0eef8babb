#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conductor/error.hpp"
#include "conductor/rational.hpp"

namespace conductor::cover {

// m points downstairs whose orbit upstairs has size d; the quotient has a
// cyclic singularity of type (e/d, r) at each of them.
struct TameBranch {
  long d = 1;
  long count = 0;
  long r = 1;
};

struct TameCoverData {
  long e = 0;
  long g = 0;
  long g_bar = 0;
  std::vector<TameBranch> branch;
};

// `count` points of type i: stabilizer of order p^(r-i), orbit size p^i.
// sw_locals lists the local Swan conductor at each of them.
struct WildBranch {
  long i = 0;
  long count = 0;
  std::vector<long> sw_locals;
};

// Genera and non-free orbit sizes for the Deuring-Shafarevich check on an
// ordinary special fibre.
struct OrdinaryData {
  long gamma = 0;
  long gamma_bar = 0;
  std::optional<std::vector<long>> small_orbits;
};

struct WildCoverData {
  long p = 0;
  long r = 1;
  long g = 0;
  long g_bar = 0;
  // Euler characteristic of the reduced quotient fibre; 2 - 2 g_bar when
  // absent, and must agree with it when present.
  std::optional<long> chi_bar;
  long sw_ext = 0;
  std::vector<WildBranch> branch;
  std::optional<OrdinaryData> ordinary;

  long degree() const;
  long chi() const { return 2 - 2 * g; }
  long chi_bar_value() const { return chi_bar.value_or(2 - 2 * g_bar); }
};

// Structural rules (BadDegree, NegativeGenus, BadOrbitType, BadResidue,
// NegativeCount, BadPrime, BadPointType, SwanCountMismatch, NegativeSwan,
// NoFullStabilizerPoint, FullStabilizerSwan, LocalSwanTooLarge,
// ChiBarMismatch) followed by RHMismatch when the Riemann-Hurwitz identity
// fails.
//   tame: 2g - 2 = e (2 g_bar - 2) + sum m_d (e - d)
//   wild: 2g - 2 = p^r (2 g_bar - 2) + sum m_i (2 p^r - 2 p^i)
Diagnostics rh_validate(const TameCoverData& data);
Diagnostics rh_validate(const WildCoverData& data);

struct DsReport {
  Diagnostics diagnostics;
  // gamma == g: the special fibre is ordinary in the sense that its p-rank
  // equals its genus.
  bool ordinary = false;
};

// gamma - 1 = |G| (gamma_bar - 1) + sum (|G| - |O_i|). Orbit sizes default to
// those of the branch records. Throws kMissingOrdinaryData without
// ordinary data. Rules: DSMismatch, BadOrbitSize, OrdinaryNotWeaklyRamified.
DsReport ds_validate(const WildCoverData& data);

struct Term {
  std::string name;
  Rational value;
  std::string formula;
};

struct ConductorReport {
  Rational c_tame;
  Rational c_wild;
  Rational c_total;
  long u = 0;
  std::vector<Term> terms;
  Diagnostics notes;

  const Term* find(const std::string& name) const;
};

// c = u/2 + (1/12) sum m (mu_Q - 2(1 - 1/e_Q)) with u = g - g_bar, checked
// against the mu~ form and the assembly
//   -12 c = 2 chi (1 - 1/e) + chi - chi_bar - sum m mu_Q.
// Throws kInvalidCover or kRHMismatch.
ConductorReport bcc_tame_good(const TameCoverData& data);

struct SwanCurve {
  Rational value;
  bool integral = false;
};

// Sw(C) = 2 sum sw_Q / p^(r-i) - sw (chi_bar - 2 sum m_i (1 - 1/p^(r-i))).
// Throws kNegativeSwan on a negative result.
SwanCurve swan_curve_keyiden(const WildCoverData& data);

// c_tame = u/2, c_wild = Sw(C)/4, checked against
//   -12 c = 2 chi (1 - 1/e) + 2 (chi/e) sw + (chi - chi_bar - Sw(C)) - mu
// with mu = 4 sum m_i (1 - 1/p^(r-i)) + 4 sum sw_Q / p^(r-i).
ConductorReport bcc_wild_weak(const WildCoverData& data);

// Generic assembler for the three forms of the base change formula:
//   1: -12 c = (1/e)(gamma_sq + 2 gamma_dot_omega - art_prime + e art)
//   2: -12 c = (2/e)(gamma_sq + gamma_dot_omega - art_prime) + art - nu
//   3: -12 c = (2/e) gamma_dot_omega + art - mu
// Throws kMissingTerm when a needed term is absent.
Rational bcc_formula_eval(int variant,
                          const std::map<std::string, Rational>& terms);

// Terms each variant reads.
std::vector<std::string> formula_terms(int variant);

// nu_Q = 12 c_tame - 2 for the p = 3 elliptic quotient singularity.
Rational elliptic_nu_p3(const Rational& c_tame_value);

}  // namespace conductor::cover
