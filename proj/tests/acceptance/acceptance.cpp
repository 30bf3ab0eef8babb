// Runs every acceptance check and prints one PASS/FAIL line per check.
// Exits non-zero when any check fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "conductor/continued_fraction.hpp"
#include "conductor/cover.hpp"
#include "conductor/dualgraph.hpp"
#include "conductor/jobs.hpp"
#include "conductor/kodaira.hpp"
#include "conductor/linalg.hpp"
#include "conductor/ramification.hpp"
#include "conductor/singularity.hpp"
#include "conductor/tame.hpp"
#include "oracles.hpp"

using conductor::Rational;
namespace dg = conductor::dualgraph;

namespace {

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

void expect_eq(const Rational& got, const Rational& want, const std::string& what) {
  if (got != want) throw Failure{what + ": got " + got.str() + ", expected " + want.str()};
}

std::string pair(long a, long b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// ---------------------------------------------------------------------------

std::string tame_cyclic_values() {
  using conductor::singularity::tame_cyclic;
  expect_eq(tame_cyclic(6, 1).mu_tilde, Rational(-10, 3), "(6,1) mu~");
  expect_eq(tame_cyclic(6, 1).mu_closed, Rational(-5, 3), "(6,1) mu");
  expect_eq(tame_cyclic(3, 2).mu_tilde, Rational(2, 3), "(3,2) mu~");
  expect_eq(tame_cyclic(3, 2).mu_closed, Rational(2), "(3,2) mu");
  expect_eq(tame_cyclic(2, 1).mu_tilde, Rational(0), "(2,1) mu~");
  expect_eq(tame_cyclic(4, 1).mu_closed, Rational(0), "(4,1) mu");
  return "4 singularities";
}

std::string kodaira_table() {
  const auto iv = dg::invariants(dg::kodaira_catalog("IV"));
  expect_eq(iv.R - Rational(iv.E), Rational(2, 3), "IV R-E");
  const auto ivs = dg::invariants(dg::kodaira_catalog("IV*"));
  expect_eq(ivs.R - Rational(ivs.E), Rational(-2, 3), "IV* R-E");

  const std::map<std::string, Rational> fixed{
      {"II", Rational(1, 6)},  {"III", Rational(1, 4)},  {"IV", Rational(1, 3)},
      {"I0*", Rational(1, 2)}, {"IV*", Rational(2, 3)}, {"III*", Rational(3, 4)},
      {"II*", Rational(5, 6)}};
  std::size_t count = 0;
  for (const auto& label : dg::kodaira_labels(8)) {
    Rational want;
    if (auto it = fixed.find(label); it != fixed.end()) {
      want = it->second;
    } else if (label.back() == '*') {
      want = Rational(1, 2);  // I_n*
    } else {
      want = Rational(0);  // I_n
    }
    const auto g = dg::kodaira_catalog(label);
    expect_eq(conductor::tame::c_tame(g), want, label + " closed form");
    expect_eq(conductor::tame::pipeline_cor_main(g).c_result, want, label + " pipeline");
    ++count;
  }
  return std::to_string(count) + " types, both evaluations";
}

std::string solver_vs_closed_form() {
  long count = 0;
  for (long e = 2; e <= 50; ++e) {
    for (long r = 1; r < e; ++r) {
      if (std::gcd(e, r) != 1) continue;
      const auto t = conductor::singularity::tame_cyclic(e, r);
      expect_eq(t.mu_solver, t.mu_closed, pair(e, r));
      // and against an independent chain computation
      expect(oracle::same(oracle::chain_milnor(oracle::hj_terms(e, r)), t.mu_solver),
             pair(e, r) + " reference chain");
      ++count;
    }
  }
  return std::to_string(count) + " coprime pairs";
}

std::string weak_wild_identity() {
  long count = 0;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    for (long s = 1; s <= 10; ++s) {
      const long sw = conductor::ramification::p_cyclic_jump_swan(p, s);
      expect(sw == (s - 1) * (p - 1), "Swan of the jump " + pair(p, s));
      const Rational lhs =
          Rational(4) * (Rational(1) - Rational(1, p) + Rational((s - 1) * (p - 1), p));
      const Rational rhs = Rational(4 * s) * (Rational(1) - Rational(1, p));
      expect_eq(lhs, rhs, pair(p, s) + " identity");
      expect_eq(conductor::singularity::weak_wild_milnor(p, sw), rhs, pair(p, s) + " mu");
      ++count;
    }
  }
  return std::to_string(count) + " (p,s)";
}

std::string elliptic_nu() {
  const std::vector<std::pair<Rational, Rational>> cases{
      {Rational(1, 6), Rational(0)},
      {Rational(5, 6), Rational(8)},
      {Rational(1, 3), Rational(2)},
      {Rational(2, 3), Rational(6)}};
  for (const auto& [c, nu] : cases) {
    expect_eq(conductor::cover::elliptic_nu_p3(c), nu, "c_tame " + c.str());
  }
  return "4 values";
}

std::string cover_vs_catalog() {
  using conductor::cover::TameCoverData;
  const std::vector<std::pair<TameCoverData, std::string>> cases{
      {{2, 1, 0, {{1, 4, 1}}}, "I0*"},
      {{3, 1, 0, {{1, 3, 1}}}, "IV"},
      {{3, 1, 0, {{1, 3, 2}}}, "IV*"}};
  for (const auto& [data, label] : cases) {
    const auto rep = conductor::cover::bcc_tame_good(data);
    const auto want = conductor::tame::c_tame(dg::kodaira_catalog(label));
    expect_eq(rep.c_total, want, label);
    expect_eq(rep.c_total, oracle::classical_c_tame(label), label + " classical");
  }
  return "I0*, IV, IV*";
}

std::string wild_assembly() {
  oracle::Rng rng(20241016);
  const int n = 500;
  for (int k = 0; k < n; ++k) {
    const auto d = oracle::random_wild_cover(rng);
    expect(conductor::cover::rh_validate(d).empty(), "generator produced an RH failure");
    const auto rep = conductor::cover::bcc_wild_weak(d);

    // Discrepancy divisor, Artin conductor, Swan sum and the key identity,
    // assembled from the raw branch data.
    const auto w = oracle::wild_numbers(d);
    const long e = oracle::ipow(d.p, d.r);
    const long chi = 2 - 2 * d.g, chi_bar = 2 - 2 * d.g_bar;
    const oracle::Frac gamma_term =
        oracle::Frac(2 * chi) * (oracle::Frac(1) - oracle::Frac(1, e)) +
        oracle::Frac(2 * chi * d.sw_ext, e);
    const oracle::Frac artin = oracle::Frac(chi - chi_bar) - w.swan;
    const oracle::Frac mu = oracle::Frac(4) * w.stab_part + oracle::Frac(4) * w.sw_local;
    const oracle::Frac c = (gamma_term + artin - mu) / oracle::Frac(-12);

    expect(oracle::same(c, rep.c_total), "instance " + std::to_string(k) + ": assembly " +
                                             c.to_rational().str() + " vs direct " +
                                             rep.c_total.str());
    expect_eq(rep.c_total, Rational(d.g - d.g_bar, 2) + w.swan.to_rational() / Rational(4),
              "instance " + std::to_string(k) + " direct form");
  }
  return std::to_string(n) + " random covers";
}

std::string property_suites() {
  // continued fractions
  for (long e = 2; e <= 200; ++e) {
    for (long r = 1; r < e; ++r) {
      if (std::gcd(e, r) != 1) continue;
      const auto hj = conductor::hj_expand(e, r);
      expect_eq(conductor::hj_eval(hj.terms), Rational(e, r), "roundtrip " + pair(e, r));
      std::vector<long> rev(hj.terms.rbegin(), hj.terms.rend());
      expect(rev == conductor::hj_expand(e, conductor::inverse_mod(r, e)).terms,
             "reversal " + pair(e, r));
    }
  }
  // graphs
  oracle::Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    const auto g = oracle::random_graph(rng);
    const auto inv = dg::invariants(g);
    const auto ref = oracle::graph_numbers(g);
    expect(inv.art_tame == ref.art && inv.art_tame == -2 * ref.u - ref.E,
           "Art_tame two paths, graph " + std::to_string(i));
    expect(oracle::same(ref.R, inv.R), "R, graph " + std::to_string(i));
    const Rational rme = inv.R - Rational(inv.E);
    if (!g.edges.empty()) {
      const auto k = static_cast<std::size_t>(oracle::uniform(rng, 0, g.edges.size() - 1));
      const auto b = dg::invariants(dg::blow_up_node(g, k));
      expect(b.u == inv.u && b.R - Rational(b.E) == rme,
             "node blowup, graph " + std::to_string(i));
    }
  }
  // filtrations with |G| <= 64
  long filtrations = 0;
  for (long g0 = 1; g0 <= 64; ++g0) {
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L,
                   53L, 59L, 61L}) {
      long wild = 1;
      for (long x = g0; x % p == 0; x /= p) wild *= p;
      std::vector<long> sizes{g0};
      std::function<void()> extend = [&] {
        if (sizes.size() > 1 || wild == 1) {
          const conductor::ramification::RamFiltration f{sizes, p};
          const auto ext = conductor::ramification::swan_extension(f);
          const auto rep = conductor::ramification::swan_artin_rep(
              f, conductor::ramification::regular_representation(f));
          expect(rep.swan == Rational(ext.sw) &&
                     rep.artin == Rational(ext.different_exponent),
                 "regular representation, |G| = " + std::to_string(g0));
          ++filtrations;
        }
        if (sizes.size() >= 5) return;
        if (sizes.size() == 1) {
          sizes.push_back(wild);
          extend();
          sizes.pop_back();
          return;
        }
        for (long d = sizes.back();; d /= p) {
          sizes.push_back(d);
          extend();
          sizes.pop_back();
          if (d == 1) break;
        }
      };
      extend();
    }
  }
  // definite solver
  for (std::size_t n = 1; n <= 12; ++n) {
    for (int rep = 0; rep < 10; ++rep) {
      const auto m = oracle::random_negative_definite(rng, n);
      conductor::RationalVector b(n);
      for (auto& x : b) x = Rational(oracle::uniform(rng, -9, 9));
      const auto x = conductor::solve_definite(m, b);
      expect(m * x == b, "residual, dimension " + std::to_string(n));
    }
  }
  return "HJ e<=200, 1000 graphs, " + std::to_string(filtrations) +
         " filtrations, 120 solves";
}

std::string determinism() {
  using conductor::jobs::Job;
  conductor::jobs::JobFile f;
  for (const auto& label : dg::kodaira_labels(4)) {
    f.jobs.push_back({"ctame", {{"type", label}}, "ct-" + label});
    f.jobs.push_back({"pipeline", {{"type", label}}, "pl-" + label});
  }
  for (long e = 2; e <= 20; ++e) {
    for (long r = 1; r < e; ++r) {
      if (std::gcd(e, r) == 1) f.jobs.push_back({"quotsing-tame", {{"e", e}, {"r", r}}, ""});
    }
  }
  f.jobs.push_back({"quotsing-wild", {{"p", 3}, {"s", 2}}, ""});
  f.jobs.push_back({"kodaira", {{"type", "bogus"}}, ""});  // an error entry
  const auto serial = conductor::jobs::batch(f, false).dump();
  for (unsigned t : {2u, 3u, 8u}) {
    expect(conductor::jobs::batch(f, true, t).dump() == serial,
           std::to_string(t) + " threads differ from serial");
  }
  return std::to_string(f.jobs.size()) + " jobs, 2/3/8 threads";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> checks{
      {"tame cyclic Milnor numbers", tame_cyclic_values},
      {"Kodaira R-E and c_tame table", kodaira_table},
      {"adjunction solver = closed form, e <= 50", solver_vs_closed_form},
      {"weak wild Milnor identity, p <= 13, s <= 10", weak_wild_identity},
      {"elliptic p = 3 nu values", elliptic_nu},
      {"tame covers = catalog conductors", cover_vs_catalog},
      {"wild conductor assembly on random covers", wild_assembly},
      {"property suites", property_suites},
      {"batch determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto& [name, fn] = checks[i];
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = fn();
    } catch (const Failure& f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::printf("%s %zu %s: %s (%lld ms)\n", ok ? "PASS" : "FAIL", i + 1, name.c_str(),
                detail.c_str(), static_cast<long long>(ms));
    if (!ok) ++failures;
  }
  std::printf("%d/%zu passed\n", static_cast<int>(checks.size()) - failures, checks.size());
  return failures == 0 ? 0 : 1;
}
