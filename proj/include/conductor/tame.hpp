#pragma once

#include <optional>

#include "conductor/dualgraph.hpp"
#include "conductor/rational.hpp"

namespace conductor::tame {

// Closed form c_tame = -(Art_tame + R) / 4, cross-checked against
// u/2 - (R - E)/4. Throws kInvalidGraph on bad input.
Rational c_tame(const dualgraph::SncdGraph& graph);

// Term-by-term evaluation of the conductor after a tame base change that
// realizes semistable reduction:
//   gamma term  = 2 sum_{i<j} E_i.E_j - sum E_i^2 - 2 sum chi(E_i) + 2 chi(generic)
//   Art'/e      = -sum_{i<j} E_i.E_j gcd(n_i,n_j)^2 / (n_i n_j)
//   -12 c       = gamma term - Art'/e + Art_tame
struct PipelineTerms {
  Rational gamma_sq_over_e;
  Rational art_prime_over_e;
  long art_base = 0;
  Rational c_result;
};

// Throws kInternal if the pipeline disagrees with c_tame.
PipelineTerms pipeline_cor_main(const dualgraph::SncdGraph& graph);

struct TameDiagnostics {
  Rational r_minus_e;
  // R = E is necessary for potentially multiplicative or good reduction.
  bool mult_reduction_possible = false;
  std::optional<bool> spectral_ok;
  // Right-hand side of the spectral bound when it was evaluated.
  std::optional<Rational> spectral_bound;
  // Set when c_tame < 0, which no genuine model produces.
  bool negative_conductor_warning = false;
};

// With mu supplied, evaluates the strict bound
//   mu < sum_nodes (node_weight - 3) + 3 (t + n - 1)
// where n is the number of components of the original special fibre
// (`original_components`, default 1 for a single isolated singularity).
TameDiagnostics diagnostics(const dualgraph::SncdGraph& graph,
                            std::optional<Rational> mu_for_spectral,
                            long original_components = 1);

}  // namespace conductor::tame
