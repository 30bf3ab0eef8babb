#include "conductor/tame.hpp"

#include <numeric>

namespace conductor::tame {

using dualgraph::SncdGraph;

Rational c_tame(const SncdGraph& graph) {
  const auto inv = dualgraph::invariants(graph);
  const Rational c = -(Rational(inv.art_tame) + inv.R) / Rational(4);
  const Rational alt =
      Rational(inv.u, 2) - (inv.R - Rational(inv.E)) / Rational(4);
  if (c != alt) {
    throw Error(ErrorCode::kInternal,
                "closed forms for c_tame disagree: " + c.str() + " vs " +
                    alt.str());
  }
  return c;
}

PipelineTerms pipeline_cor_main(const SncdGraph& graph) {
  const auto inv = dualgraph::invariants(graph);
  const auto& comps = graph.components;

  long sum_self = 0;
  for (long s : inv.self_intersections) sum_self += s;
  long sum_chi = 0;
  for (const auto& c : comps) sum_chi += 2 - 2 * c.g;

  PipelineTerms t;
  t.gamma_sq_over_e = Rational(2 * inv.E - sum_self - 2 * sum_chi +
                               2 * inv.chi_generic);
  for (const auto& e : graph.edges) {
    const long n = comps[e.a].n;
    const long m = comps[e.b].n;
    const long d = std::gcd(n, m);
    t.art_prime_over_e -= Rational(d * d, n * m);
  }
  t.art_base = inv.art_tame;
  const Rational minus_12c =
      t.gamma_sq_over_e - t.art_prime_over_e + Rational(t.art_base);
  t.c_result = -minus_12c / Rational(12);

  const Rational closed = c_tame(graph);
  if (t.c_result != closed) {
    throw Error(ErrorCode::kInternal,
                "term pipeline gives c = " + t.c_result.str() +
                    " but the closed form gives " + closed.str());
  }
  return t;
}

TameDiagnostics diagnostics(const SncdGraph& graph,
                            std::optional<Rational> mu_for_spectral,
                            long original_components) {
  const auto inv = dualgraph::invariants(graph);
  TameDiagnostics d;
  d.r_minus_e = inv.R - Rational(inv.E);
  d.mult_reduction_possible = d.r_minus_e.is_zero();
  d.negative_conductor_warning = c_tame(graph).sign() < 0;
  if (mu_for_spectral) {
    if (original_components < 1) {
      throw Error(ErrorCode::kPrecondition,
                  "number of original components must be positive");
    }
    // sum over nodes of (weight - 3) is 3R - 3E.
    const Rational bound = Rational(3) * d.r_minus_e +
                           Rational(3 * (inv.t + original_components - 1));
    d.spectral_bound = bound;
    d.spectral_ok = *mu_for_spectral < bound;
  }
  return d;
}

}  // namespace conductor::tame
