#include "conductor/singularity.hpp"

#include <algorithm>
#include <string>

#include "conductor/error.hpp"
#include "conductor/numtheory.hpp"

namespace conductor::singularity {

namespace {

[[noreturn]] void invalid(const std::string& msg) {
  throw Error(ErrorCode::kInvalidResolution, msg);
}

long edge_count(const ResolutionDatum& datum) {
  const auto& m = datum.intersection;
  long edges = 0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = i + 1; j < m.dim(); ++j) edges += m.at(i, j).to_long();
  }
  return edges;
}

bool connected(const SymMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n; ++w) {
      if (!seen[w] && w != v && !m.at(v, w).is_zero()) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

}  // namespace

void validate(const ResolutionDatum& datum) {
  const auto& m = datum.intersection;
  if (m.dim() == 0) invalid("resolution has no exceptional curves");
  if (datum.genera.size() != m.dim()) {
    throw Error(ErrorCode::kInconsistentDims,
                std::to_string(datum.genera.size()) + " genera for " +
                    std::to_string(m.dim()) + " curves");
  }
  for (long g : datum.genera) {
    if (g < 0) invalid("negative genus");
  }
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      const auto& v = m.at(i, j);
      if (!v.is_integer()) invalid("intersection numbers must be integers");
      if (i == j && v > Rational(-1)) {
        invalid("self-intersection of curve " + std::to_string(i) +
                " is " + v.str() + ", expected <= -1");
      }
      if (i != j && v.sign() < 0) invalid("negative intersection number");
    }
  }
  if (!connected(m)) invalid("exceptional locus is not connected");
  if (datum.rational_flag && datum.p_g && *datum.p_g != 0) {
    invalid("rational singularity with p_g != 0");
  }
  if (datum.p_g && *datum.p_g < 0) invalid("p_g must be non-negative");
  if (!is_negative_definite(m)) {
    throw Error(ErrorCode::kNotNegativeDefinite,
                "intersection matrix is not negative definite");
  }
}

long first_betti(const ResolutionDatum& datum) {
  return edge_count(datum) - static_cast<long>(datum.intersection.dim()) + 1;
}

Discrepancy discrepancy_solve(const ResolutionDatum& datum) {
  validate(datum);
  const auto& m = datum.intersection;
  RationalVector b(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    b[i] = Rational(2 * datum.genera[i] - 2) - m.at(i, i);
  }
  Discrepancy out;
  out.coeffs = solve_definite(m, b);
  out.gamma_sq = dot(out.coeffs, b);
  return out;
}

MilnorNu milnor_nu(const ResolutionDatum& datum) {
  const auto disc = discrepancy_solve(datum);
  long p_g = 0;
  if (datum.p_g) {
    p_g = *datum.p_g;
  } else if (!datum.rational_flag) {
    invalid("p_g is required unless the singularity is marked rational");
  }
  MilnorNu out;
  out.gamma_sq = disc.gamma_sq;
  out.V = static_cast<long>(datum.genera.size());
  out.b1 = first_betti(datum);
  long sum_2g = 0;
  for (long g : datum.genera) sum_2g += 2 * g;
  out.nu = disc.gamma_sq - Rational(sum_2g + out.b1) + Rational(out.V);
  out.mu = out.nu + Rational(12 * p_g);
  if (datum.rational_flag && sum_2g == 0 && out.b1 == 0) {
    const Rational expected = disc.gamma_sq + Rational(out.V);
    if (out.mu != expected || out.nu != expected) {
      throw Error(ErrorCode::kInternal,
                  "rational singularity with mu != Gamma^2 + V");
    }
  }
  return out;
}

ResolutionDatum chain_datum(const std::vector<long>& terms) {
  ResolutionDatum d;
  d.genera.assign(terms.size(), 0);
  d.intersection = SymMatrix(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    d.intersection.set(i, i, Rational(-terms[i]));
    if (i + 1 < terms.size()) d.intersection.set(i, i + 1, Rational(1));
  }
  d.p_g = 0;
  d.rational_flag = true;
  return d;
}

std::vector<long> p_sequence(const std::vector<long>& terms, PConvention conv) {
  std::vector<long> p{conv == PConvention::kUnitStart ? 1L : 0L, 1L};
  for (std::size_t i = 0; i < terms.size(); ++i) {
    p.push_back(terms[i] * p[i + 1] - p[i]);
  }
  return p;
}

RationalVector cyclic_discrepancy(const HJExpansion& hj, PConvention conv) {
  const auto p = p_sequence(hj.terms, conv);
  RationalVector out;
  for (std::size_t i = 1; i <= hj.length(); ++i) {
    out.push_back(Rational(p[i] + hj.remainders[i], hj.e) - Rational(1));
  }
  return out;
}

TameCyclic tame_cyclic(long e, long r) {
  TameCyclic out;
  out.hj = hj_expand(e, r);
  out.chain = chain_datum(out.hj.terms);
  const auto& a = out.hj.terms;
  std::vector<long> reversed(a.rbegin(), a.rend());
  Rational sum_a;
  for (long v : a) sum_a += Rational(v);
  const Rational tail = Rational(2) * (Rational(1) - Rational(1, e));
  out.mu_tilde = Rational(3 * static_cast<long>(a.size())) -
                 (hj_eval(a).reciprocal() + sum_a + hj_eval(reversed).reciprocal());
  out.mu_closed = out.mu_tilde + tail;
  const auto disc = discrepancy_solve(out.chain);
  out.gamma_coeffs = disc.coeffs;
  out.mu_solver = milnor_nu(out.chain).mu;
  if (out.mu_closed != out.mu_solver) {
    throw Error(ErrorCode::kInternal,
                "closed-form Milnor number " + out.mu_closed.str() +
                    " disagrees with the adjunction solver " +
                    out.mu_solver.str() + " for (" + std::to_string(e) + "," +
                    std::to_string(r) + ")");
  }
  return out;
}

Rational weak_wild_milnor(long e_p, long sw) {
  if (!prime_power(e_p)) {
    throw Error(ErrorCode::kPrecondition,
                "e_P = " + std::to_string(e_p) + " is not a prime power");
  }
  if (sw < 0) throw Error(ErrorCode::kPrecondition, "sw must be non-negative");
  return Rational(4 * (e_p - 1 + sw), e_p);
}

namespace {

RationalVector chart_x(const HJExpansion& hj, long p, long lambda,
                       PConvention conv) {
  const auto P = p_sequence(hj.terms, conv);
  RationalVector x;
  for (std::size_t i = 0; i <= hj.length(); ++i) {
    x.push_back(Rational(p * P[i] + lambda * hj.remainders[i], p * p));
  }
  return x;
}

}  // namespace

PCyclicWildChart p_cyclic_wild_chart(long p, long s, long r1, long r_minus1,
                                     PConvention conv) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::kPrecondition, std::to_string(p) + " is not prime");
  }
  if (s < 1) throw Error(ErrorCode::kPrecondition, "s must be positive");
  for (long r : {r1, r_minus1}) {
    if (r <= 0 || r >= p) {
      throw Error(ErrorCode::kPrecondition,
                  "residue " + std::to_string(r) + " not in (0, p)");
    }
  }
  PCyclicWildChart c;
  c.p = p;
  c.s = s;
  c.r1 = r1;
  c.r_minus1 = r_minus1;
  c.convention = conv;
  c.alpha = p * s;
  c.lambda = p * (1 - c.alpha) + 2 * c.alpha;
  c.positive = hj_expand(p, r1);
  c.negative = hj_expand(p, r_minus1);
  c.x_positive = chart_x(c.positive, p, c.lambda, conv);
  c.x_negative = chart_x(c.negative, p, c.lambda, conv);
  for (const auto& x : c.x_positive) c.k_positive.push_back(x - Rational(1));
  for (const auto& x : c.x_negative) c.k_negative.push_back(x - Rational(1));
  const Rational k0 = c.k_positive[0];
  for (long j = 2; j <= c.alpha; ++j) {
    c.y.push_back(Rational(c.alpha - j + 1, c.alpha) * k0);
  }
  c.mu_target = Rational(4 * s) * (Rational(1) - Rational(1, p));
  c.sw_jump = (s - 1) * (p - 1);
  const Rational x0 = c.x_positive[0];
  if (!x0.is_zero()) {
    const Rational y2 = c.y.empty() ? Rational(0) : c.y[0];
    c.implied_node_self_intersection =
        -(Rational(2) + c.k_positive[1] + c.k_negative[1] + y2) / x0;
  }
  return c;
}

std::optional<ResolutionDatum> chart_resolution(const PCyclicWildChart& chart) {
  if (!chart.implied_node_self_intersection) return std::nullopt;
  const Rational e0 = *chart.implied_node_self_intersection;
  if (!e0.is_integer() || e0 > Rational(-1)) return std::nullopt;
  const auto& pos = chart.positive.terms;
  const auto& neg = chart.negative.terms;
  const std::size_t d_count = static_cast<std::size_t>(chart.alpha - 1);
  const std::size_t n = 1 + d_count + pos.size() + neg.size();
  ResolutionDatum d;
  d.genera.assign(n, 0);
  d.intersection = SymMatrix(n);
  d.intersection.set(0, 0, e0);
  auto add_arm = [&](std::size_t start, const std::vector<long>& diag) {
    std::size_t prev = 0;
    for (std::size_t k = 0; k < diag.size(); ++k) {
      d.intersection.set(start + k, start + k, Rational(-diag[k]));
      d.intersection.set(prev, start + k, Rational(1));
      prev = start + k;
    }
  };
  add_arm(1, std::vector<long>(d_count, 2));
  add_arm(1 + d_count, pos);
  add_arm(1 + d_count + pos.size(), neg);
  d.p_g = 0;
  d.rational_flag = true;
  return d;
}

std::vector<ChartProbe> chart_discovery(long p, long s) {
  std::vector<ChartProbe> out;
  for (long r1 = 1; r1 < p; ++r1) {
    for (long rm = 1; rm < p; ++rm) {
      const auto chart = p_cyclic_wild_chart(p, s, r1, rm);
      ChartProbe probe;
      probe.r1 = r1;
      probe.r_minus1 = rm;
      if (chart.implied_node_self_intersection) {
        probe.node_self_intersection = *chart.implied_node_self_intersection;
      }
      const auto datum = chart_resolution(chart);
      if (datum) {
        try {
          const auto disc = discrepancy_solve(*datum);
          RationalVector expected{chart.k_positive[0]};
          expected.insert(expected.end(), chart.y.begin(), chart.y.end());
          expected.insert(expected.end(), chart.k_positive.begin() + 1,
                          chart.k_positive.end());
          expected.insert(expected.end(), chart.k_negative.begin() + 1,
                          chart.k_negative.end());
          probe.realizable = true;
          probe.coefficients_match = expected == disc.coeffs;
          probe.mu_solver = milnor_nu(*datum).mu;
          probe.mu_matches_target = probe.mu_solver == chart.mu_target;
        } catch (const Error& err) {
          if (err.code() != ErrorCode::kNotNegativeDefinite) throw;
        }
      }
      out.push_back(probe);
    }
  }
  return out;
}

}  // namespace conductor::singularity
