#include <doctest.h>

#include <numeric>

#include "conductor/numtheory.hpp"
#include "conductor/singularity.hpp"
#include "oracles.hpp"

using conductor::Error;
using conductor::ErrorCode;
using conductor::Rational;
using conductor::RationalVector;
using conductor::SymMatrix;
using namespace conductor::singularity;

namespace {

ResolutionDatum datum(std::initializer_list<std::initializer_list<long>> rows,
                      std::vector<long> genera = {}) {
  std::vector<RationalVector> r;
  for (auto row : rows) {
    RationalVector v;
    for (long x : row) v.emplace_back(x);
    r.push_back(v);
  }
  ResolutionDatum d;
  d.intersection = SymMatrix::from_rows(r);
  d.genera = genera.empty() ? std::vector<long>(r.size(), 0) : genera;
  d.rational_flag = true;
  return d;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::kInternal;
}

// Blow up a general point of curve i: new (-1)-curve meeting it once.
ResolutionDatum blow_up(const ResolutionDatum& d, std::size_t i) {
  const std::size_t n = d.intersection.dim();
  ResolutionDatum out = d;
  out.intersection = SymMatrix(n + 1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) out.intersection.set(a, b, d.intersection.at(a, b));
  }
  out.intersection.set(i, i, d.intersection.at(i, i) - Rational(1));
  out.intersection.set(n, n, Rational(-1));
  out.intersection.set(i, n, Rational(1));
  out.genera.push_back(0);
  return out;
}

}  // namespace

TEST_CASE("discrepancy_solve worked values") {
  const auto a1 = discrepancy_solve(datum({{-2}}));
  CHECK(a1.coeffs == RationalVector{Rational(0)});
  CHECK(a1.gamma_sq == Rational(0));
  const auto m3 = discrepancy_solve(datum({{-3}}));
  CHECK(m3.coeffs == RationalVector{Rational(-1, 3)});
  CHECK(m3.gamma_sq == Rational(-1, 3));
  const auto ch = discrepancy_solve(datum({{-3, 1}, {1, -2}}));
  CHECK(ch.coeffs == RationalVector{Rational(-2, 5), Rational(-1, 5)});
  CHECK(ch.gamma_sq == Rational(-2, 5));
}

TEST_CASE("milnor_nu worked values") {
  for (long n = 1; n <= 8; ++n) {
    const auto mn = milnor_nu(chain_datum(std::vector<long>(n, 2)));
    CHECK(mn.mu == Rational(n));
    CHECK(mn.nu == Rational(n));
  }
  CHECK(milnor_nu(datum({{-3}})).mu == Rational(2, 3));
  CHECK(milnor_nu(datum({{-3, 1}, {1, -2}})).mu == Rational(8, 5));
  // D4: rational double point, mu = 4.
  CHECK(milnor_nu(datum({{-2, 1, 1, 1}, {1, -2, 0, 0}, {1, 0, -2, 0}, {1, 0, 0, -2}})).mu ==
        Rational(4));
}

TEST_CASE("milnor_nu with genus and p_g") {
  // Single elliptic curve with E^2 = -1 (simple elliptic, p_g = 1):
  // Gamma = -E, Gamma^2 = -1, mu = 12 - 1 - 2 - 0 + 1 = 10, nu = -2.
  auto d = datum({{-1}}, {1});
  d.rational_flag = false;
  d.p_g = 1;
  const auto mn = milnor_nu(d);
  CHECK(mn.gamma_sq == Rational(-1));
  CHECK(mn.mu == Rational(10));
  CHECK(mn.nu == Rational(-2));
  d.p_g.reset();
  CHECK(code_of([&] { milnor_nu(d); }) == ErrorCode::kInvalidResolution);
  // Cycle of three (-3) curves: b1 = 1.
  auto cyc = datum({{-3, 1, 1}, {1, -3, 1}, {1, 1, -3}});
  cyc.rational_flag = false;
  cyc.p_g = 1;
  CHECK(first_betti(cyc) == 1);
  const auto mc = milnor_nu(cyc);
  CHECK(mc.mu - mc.nu == Rational(12));
}

TEST_CASE("resolution validation") {
  CHECK(code_of([] { discrepancy_solve(datum({{-1, 1}, {1, -1}})); }) ==
        ErrorCode::kNotNegativeDefinite);
  CHECK(code_of([] { discrepancy_solve(datum({{0}})); }) == ErrorCode::kInvalidResolution);
  CHECK(code_of([] { discrepancy_solve(datum({{-2, -1}, {-1, -2}})); }) ==
        ErrorCode::kInvalidResolution);
  CHECK(code_of([] { discrepancy_solve(datum({{-2, 0}, {0, -2}})); }) ==
        ErrorCode::kInvalidResolution);
  auto d = datum({{-2}});
  d.genera = {0, 0};
  CHECK(code_of([&] { discrepancy_solve(d); }) == ErrorCode::kInconsistentDims);
  auto r = datum({{-2}});
  r.p_g = 1;
  CHECK(code_of([&] { discrepancy_solve(r); }) == ErrorCode::kInvalidResolution);
}

TEST_CASE("tame_cyclic worked values") {
  const auto q61 = tame_cyclic(6, 1);
  CHECK(q61.mu_closed == Rational(-5, 3));
  CHECK(q61.mu_tilde == Rational(-10, 3));
  const auto q32 = tame_cyclic(3, 2);
  CHECK(q32.mu_closed == Rational(2));
  CHECK(q32.mu_tilde == Rational(2, 3));
  CHECK(tame_cyclic(4, 1).mu_closed == Rational(0));
  CHECK(tame_cyclic(2, 1).mu_tilde == Rational(0));
  CHECK(tame_cyclic(3, 1).mu_closed == Rational(2, 3));
  CHECK(tame_cyclic(5, 2).mu_closed == Rational(8, 5));
}

TEST_CASE("closed form agrees with an independent chain solve for e <= 50") {
  for (long e = 2; e <= 50; ++e) {
    for (long r = 1; r < e; ++r) {
      if (std::gcd(e, r) != 1) continue;
      const auto q = tame_cyclic(e, r);
      REQUIRE(q.mu_closed == q.mu_solver);
      REQUIRE(oracle::same(oracle::chain_milnor(q.hj.terms), q.mu_closed));
      REQUIRE(q.mu_closed - q.mu_tilde == Rational(2) * (Rational(1) - Rational(1, e)));
      // the reversed chain is the singularity (e, r') with r r' = 1 mod e
      const auto dual = tame_cyclic(e, conductor::inverse_mod(r, e));
      REQUIRE(dual.mu_closed == q.mu_closed);
    }
  }
}

TEST_CASE("P-sequence conventions against the solver") {
  const auto hj = conductor::hj_expand(5, 2);
  const auto solver = discrepancy_solve(chain_datum(hj.terms)).coeffs;
  CHECK(cyclic_discrepancy(hj, PConvention::kStandard) == solver);
  const auto unit_start = cyclic_discrepancy(hj, PConvention::kUnitStart);
  CHECK(unit_start[0] == solver[0]);
  CHECK(unit_start[1] == Rational(-2, 5));
  CHECK(unit_start[1] != solver[1]);
  for (long e = 2; e <= 40; ++e) {
    for (long r = 1; r < e; ++r) {
      if (std::gcd(e, r) != 1) continue;
      const auto h = conductor::hj_expand(e, r);
      REQUIRE(cyclic_discrepancy(h, PConvention::kStandard) ==
              discrepancy_solve(chain_datum(h.terms)).coeffs);
    }
  }
}

TEST_CASE("milnor_nu is unchanged by blowing up points of the exceptional locus") {
  oracle::Rng rng(41);
  for (long e = 2; e <= 25; ++e) {
    for (long r = 1; r < e; ++r) {
      if (std::gcd(e, r) != 1) continue;
      auto d = chain_datum(conductor::hj_expand(e, r).terms);
      const auto base = milnor_nu(d);
      for (int k = 0; k < 3; ++k) {
        d = blow_up(d, static_cast<std::size_t>(oracle::uniform(rng, 0, d.genera.size() - 1)));
        const auto mn = milnor_nu(d);
        REQUIRE(mn.mu == base.mu);
        REQUIRE(mn.nu == base.nu);
      }
    }
  }
}

TEST_CASE("discrepancy_solve satisfies its linear system") {
  oracle::Rng rng(42);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = static_cast<std::size_t>(oracle::uniform(rng, 1, 8));
    std::vector<long> a(n);
    for (auto& x : a) x = oracle::uniform(rng, 2, 7);
    const auto d = chain_datum(a);
    const auto sol = discrepancy_solve(d);
    for (std::size_t row = 0; row < n; ++row) {
      Rational acc;
      for (std::size_t c = 0; c < n; ++c) acc += d.intersection.at(row, c) * sol.coeffs[c];
      REQUIRE(acc == Rational(-2) + Rational(a[row]));
    }
  }
}

TEST_CASE("weak wild Milnor numbers") {
  CHECK(weak_wild_milnor(2, 1) == Rational(4));
  CHECK(weak_wild_milnor(3, 2) == Rational(16, 3));
  for (long p : {2, 3, 5, 7}) {
    CHECK(weak_wild_milnor(p, 0) == Rational(4) * (Rational(1) - Rational(1, p)));
  }
  CHECK(weak_wild_milnor(8, 3) == Rational(5));
  CHECK(code_of([] { weak_wild_milnor(6, 1); }) == ErrorCode::kPrecondition);
  CHECK(code_of([] { weak_wild_milnor(2, -1); }) == ErrorCode::kPrecondition);
  for (long p = 2; p <= 13; ++p) {
    if (!conductor::is_prime(p)) continue;
    for (long s = 1; s <= 10; ++s) {
      REQUIRE(weak_wild_milnor(p, (s - 1) * (p - 1)) ==
              Rational(4 * s) * (Rational(1) - Rational(1, p)));
    }
  }
}

TEST_CASE("p-cyclic wild chart") {
  const auto c = p_cyclic_wild_chart(2, 1, 1, 1);
  CHECK(c.alpha == 2);
  CHECK(c.lambda == 2);
  CHECK(c.k_positive[0] == Rational(0));
  REQUIRE(c.y.size() == 1);
  CHECK(c.y[0] == Rational(0));
  CHECK(c.x_positive[0] == Rational(c.lambda, c.p));
  CHECK(p_cyclic_wild_chart(3, 1, 1, 2).mu_target == Rational(8, 3));
  const auto c22 = p_cyclic_wild_chart(2, 2, 1, 1);
  CHECK(c22.mu_target == Rational(4));
  CHECK(c22.sw_jump == 1);
  CHECK(code_of([] { p_cyclic_wild_chart(4, 1, 1, 1); }) == ErrorCode::kPrecondition);
  CHECK(code_of([] { p_cyclic_wild_chart(3, 1, 3, 1); }) == ErrorCode::kPrecondition);
  CHECK(code_of([] { p_cyclic_wild_chart(3, 0, 1, 1); }) == ErrorCode::kPrecondition);
}

TEST_CASE("wild chart coefficients obey the chain recurrences") {
  for (long p : {2, 3, 5, 7}) {
    for (long s = 1; s <= 3; ++s) {
      for (long r1 = 1; r1 < p; ++r1) {
        const auto c = p_cyclic_wild_chart(p, s, r1, 1);
        // x_{i-1} - a_i x_i + x_{i+1} = 0 along the arm, with x_{l+1} = 1.
        auto x = c.x_positive;
        x.push_back(Rational(1));
        for (std::size_t i = 1; i + 1 < x.size(); ++i) {
          REQUIRE(x[i - 1] - Rational(c.positive.terms[i - 1]) * x[i] + x[i + 1] ==
                  Rational(0));
        }
        // the D-chain is linear in j and vanishes one step past D_alpha
        for (std::size_t j = 0; j < c.y.size(); ++j) {
          REQUIRE(c.y[j] == Rational(c.alpha - static_cast<long>(j) - 1, c.alpha) *
                                c.k_positive[0]);
        }
      }
    }
  }
}

TEST_CASE("chart discovery reports solver comparisons without asserting them") {
  const auto probes = chart_discovery(2, 1);
  REQUIRE(probes.size() == 1);
  CHECK(probes[0].realizable);
  CHECK(probes[0].coefficients_match);
  CHECK(probes[0].node_self_intersection == Rational(-2));
  // the D4 configuration, whose Milnor number is 4
  CHECK(probes[0].mu_solver == Rational(4));
  for (long p : {3, 5}) {
    for (long s = 1; s <= 2; ++s) {
      for (const auto& pr : chart_discovery(p, s)) {
        if (pr.realizable) REQUIRE(pr.coefficients_match);
      }
    }
  }
}
