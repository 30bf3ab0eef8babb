#include <doctest.h>

#include <numeric>

#include "conductor/continued_fraction.hpp"
#include "conductor/error.hpp"
#include "conductor/linalg.hpp"
#include "oracles.hpp"

using conductor::Error;
using conductor::ErrorCode;
using conductor::Rational;
using conductor::RationalVector;
using conductor::SymMatrix;

namespace {

SymMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RationalVector> r;
  for (auto row : rows) {
    RationalVector v;
    for (long x : row) v.emplace_back(x);
    r.push_back(v);
  }
  return SymMatrix::from_rows(r);
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

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(6, 3).str() == "2");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(-5, 3) < Rational(0));
  CHECK(Rational(7, 3).reciprocal() == Rational(3, 7));
  CHECK(Rational::parse("-10/3") == Rational(-10, 3));
  CHECK(Rational::parse("−5/3") == Rational(-5, 3));
  CHECK(Rational::parse("4/2") == Rational(2));
  CHECK(code_of([] { Rational::parse("1/0"); }) == ErrorCode::kParseError);
  CHECK(code_of([] { Rational::parse("1.5"); }) == ErrorCode::kParseError);
  CHECK(code_of([] { Rational::parse(""); }) == ErrorCode::kParseError);
  CHECK(code_of([] { (void)(Rational(1) / Rational(0)); }) == ErrorCode::kPrecondition);
}

TEST_CASE("rational string form re-parses to the same value") {
  oracle::Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    const long n = oracle::uniform(rng, -1000, 1000);
    const long d = oracle::uniform(rng, 1, 1000);
    const Rational q(n, d);
    CHECK(Rational::parse(q.str()) == q);
  }
}

TEST_CASE("hj_expand worked values") {
  CHECK(conductor::hj_expand(6, 1).terms == std::vector<long>{6});
  CHECK(conductor::hj_expand(3, 2).terms == std::vector<long>{2, 2});
  CHECK(conductor::hj_expand(7, 3).terms == std::vector<long>{3, 2, 2});
  CHECK(conductor::hj_expand(7, 3).remainders == std::vector<long>{7, 3, 2, 1});
  CHECK(conductor::hj_eval(std::vector<long>{6}) == Rational(6));
  CHECK(conductor::hj_eval(std::vector<long>{2, 2}) == Rational(3, 2));
  CHECK(conductor::hj_eval(std::vector<long>{3, 2}) == Rational(5, 2));
}

TEST_CASE("hj_expand rejects bad input") {
  CHECK(code_of([] { conductor::hj_expand(6, 2); }) == ErrorCode::kPrecondition);
  CHECK(code_of([] { conductor::hj_expand(1, 1); }) == ErrorCode::kPrecondition);
  CHECK(code_of([] { conductor::hj_expand(5, 5); }) == ErrorCode::kPrecondition);
  CHECK(code_of([] { conductor::hj_expand(5, 0); }) == ErrorCode::kPrecondition);
  CHECK(code_of([] { conductor::hj_eval(std::vector<long>{}); }) ==
        ErrorCode::kPrecondition);
  CHECK(code_of([] { conductor::hj_eval(std::vector<long>{3, 1}); }) ==
        ErrorCode::kPrecondition);
}

TEST_CASE("hj roundtrip, remainder chain and reversal duality for e <= 200") {
  for (long e = 2; e <= 200; ++e) {
    for (long r = 1; r < e; ++r) {
      if (std::gcd(e, r) != 1) continue;
      const auto hj = conductor::hj_expand(e, r);
      REQUIRE(hj.terms == oracle::hj_terms(e, r));
      for (long a : hj.terms) REQUIRE(a >= 2);
      REQUIRE(hj.remainders.back() == 1);
      REQUIRE(oracle::same(oracle::hj_value(hj.terms), Rational(e, r)));
      REQUIRE(conductor::hj_eval(hj.terms) == Rational(e, r));
      std::vector<long> rev(hj.terms.rbegin(), hj.terms.rend());
      const Rational back = conductor::hj_eval(rev);
      const long r_prime = conductor::inverse_mod(r, e);
      REQUIRE((r * r_prime) % e == 1 % e);
      REQUIRE(back == Rational(e, r_prime));
    }
  }
}

TEST_CASE("solve_definite worked systems") {
  CHECK(conductor::solve_definite(mat({{-2}}), RationalVector{Rational(0)}) ==
        RationalVector{Rational(0)});
  CHECK(conductor::solve_definite(mat({{-3}}), RationalVector{Rational(1)}) ==
        RationalVector{Rational(-1, 3)});
  CHECK(conductor::solve_definite(mat({{-3, 1}, {1, -2}}),
                                  RationalVector{Rational(1), Rational(0)}) ==
        RationalVector{Rational(-2, 5), Rational(-1, 5)});
}

TEST_CASE("solve_definite errors") {
  CHECK(code_of([] {
          conductor::solve_definite(mat({{-1, 1}, {1, -1}}),
                                    RationalVector{Rational(0), Rational(0)});
        }) == ErrorCode::kSingularMatrix);
  CHECK(code_of([] {
          conductor::solve_definite(mat({{1}}), RationalVector{Rational(0)});
        }) == ErrorCode::kSingularMatrix);
  CHECK(code_of([] {
          conductor::solve_definite(mat({{-2}}), RationalVector{Rational(0), Rational(1)});
        }) == ErrorCode::kDimensionMismatch);
  CHECK(code_of([] {
          SymMatrix::from_rows({RationalVector{Rational(1), Rational(2)},
                                RationalVector{Rational(3), Rational(1)}});
        }) == ErrorCode::kPrecondition);
}

TEST_CASE("2x2 solve agrees with the explicit inverse") {
  oracle::Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const long a = -oracle::uniform(rng, 1, 9);
    const long c = -oracle::uniform(rng, 1, 9);
    const long b = oracle::uniform(rng, -4, 4);
    if (a * c - b * b <= 0) continue;
    const long y0 = oracle::uniform(rng, -5, 5), y1 = oracle::uniform(rng, -5, 5);
    const auto x = conductor::solve_definite(mat({{a, b}, {b, c}}),
                                             RationalVector{Rational(y0), Rational(y1)});
    const long det = a * c - b * b;
    CHECK(x[0] == Rational(c * y0 - b * y1, det));
    CHECK(x[1] == Rational(a * y1 - b * y0, det));
  }
}

TEST_CASE("solve_definite has zero residual on random definite systems") {
  oracle::Rng rng(12);
  for (std::size_t n = 1; n <= 12; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      const auto m = oracle::random_negative_definite(rng, n);
      RationalVector b(n);
      for (auto& x : b) x = Rational(oracle::uniform(rng, -9, 9), oracle::uniform(rng, 1, 5));
      REQUIRE(conductor::is_negative_definite(m));
      const auto x = conductor::solve_definite(m, b);
      // residual computed by hand rather than through SymMatrix::operator*
      for (std::size_t i = 0; i < n; ++i) {
        Rational acc;
        for (std::size_t j = 0; j < n; ++j) acc += m.at(i, j) * x[j];
        REQUIRE(acc == b[i]);
      }
    }
  }
}

TEST_CASE("check_neg_semidefinite examples") {
  auto r0 = conductor::check_neg_semidefinite(mat({{0}}));
  CHECK(r0.rank == 0);
  CHECK(r0.kernel_basis.size() == 1);
  CHECK(r0.zariski_ok);
  // Kodaira IV: center (3) meets three leaves (1).
  auto iv = conductor::check_neg_semidefinite(
      mat({{-1, 1, 1, 1}, {1, -3, 0, 0}, {1, 0, -3, 0}, {1, 0, 0, -3}}));
  CHECK(iv.rank == 3);
  REQUIRE(iv.kernel_basis.size() == 1);
  const auto& v = iv.kernel_basis[0];
  const Rational s = v[1];
  CHECK(v[0] == Rational(3) * s);
  CHECK(v[2] == s);
  CHECK(v[3] == s);
  CHECK(iv.zariski_ok);
  CHECK_FALSE(conductor::check_neg_semidefinite(mat({{1}})).zariski_ok);
  CHECK_FALSE(conductor::check_neg_semidefinite(mat({{-1, 2}, {2, -1}})).negative_semidefinite);
  CHECK_FALSE(conductor::check_neg_semidefinite(mat({{0, 0}, {0, 0}})).zariski_ok);
  CHECK_FALSE(conductor::check_neg_semidefinite(mat({{0, 1}, {1, 0}})).negative_semidefinite);
}

TEST_CASE("kernel vectors are annihilated exactly") {
  oracle::Rng rng(13);
  for (int rep = 0; rep < 200; ++rep) {
    const auto g = oracle::random_graph(rng);
    const auto m = conductor::dualgraph::intersection_matrix(g);
    const auto rep_ = conductor::check_neg_semidefinite(m);
    for (const auto& v : rep_.kernel_basis) {
      const auto mv = m * v;
      for (const auto& x : mv) REQUIRE(x.is_zero());
    }
    REQUIRE(rep_.zariski_ok);
  }
}
