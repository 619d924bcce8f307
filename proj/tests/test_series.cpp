#include <random>

#include "doctest.h"
#include "test_util.hpp"

using namespace kft;

TEST_CASE("series arithmetic and truncation") {
  auto p = policy(6, 6);
  auto x = var(nu(1), p);
  auto one = RSeries::one(p);
  CHECK((one + x) * (one - x) == one - x * x);

  auto p1 = policy(6, 1);
  auto y = var(nu(1), p1), one1 = RSeries::one(p1);
  CHECK((one1 + y) * (one1 - y) == one1);

  auto p4 = policy(6, 4);
  auto a = var(nu(1), p4), b = var(nu(2), p4);
  RSeries expect(p4);
  expect.add_term(Monomial::of(nu(1), 2), 1);
  expect.add_term(Monomial::from_factors({{nu(1), 1}, {nu(2), 1}}), 2);
  expect.add_term(Monomial::of(nu(2), 2), 1);
  CHECK((a + b) * (a + b) == expect);

  CHECK_THROWS_AS(x + y, PolicyMismatch);
}

TEST_CASE("exp_series") {
  auto p2 = policy(6, 2);
  CHECK(exp_series(RSeries(p2)) == RSeries::one(p2));
  auto x = var(nu(1), p2);
  CHECK(exp_series(x) == RSeries::one(p2) + x + x * x * Rational(1, 2));

  auto p4 = policy(6, 4);
  auto h = var(nu(2), p4) * Rational(1, 2);
  auto e = exp_series(h);
  CHECK(e == RSeries::one(p4) + h + h * h * Rational(1, 2));
  CHECK(e.coeff(Monomial::of(nu(2), 2)) == Rational(1, 8));

  CHECK_THROWS_AS(exp_series(RSeries::one(p4)), DomainError);

  auto p = policy(6, 6);
  CHECK(exp_series(var(nu(1), p)).coeff(Monomial::of(nu(1), 2)) == Rational(1, 2));
}

TEST_CASE("derive") {
  auto p = policy(6, 6);
  auto v2 = var(nu(2), p);
  CHECK((v2 * v2).derive(nu(2)) == v2 * Rational(2));
  auto p2 = policy(6, 2);
  auto x = var(nu(1), p2);
  CHECK(exp_series(x).derive(nu(1)) == RSeries::one(p2) + x);
  auto s = var(t(0), p) * var(nu(1), p) + var(t(1), p);
  CHECK(s.derive(t(0)) == var(nu(1), p));
}

TEST_CASE("substitute") {
  auto p = policy(6, 6);
  auto one = RSeries::one(p);
  auto n1 = var(nu(1), p), t0 = var(t(0), p);
  CHECK(substitute(one + n1, {{nu(1), t0}}, p) == one + t0);
  CHECK(substitute(n1 * n1, {{nu(1), n1 + t0}}, p) == n1 * n1 + n1 * t0 * Rational(2) + t0 * t0);

  // exp(nu_1 + nu_2/2) with nu_1 -> t_0 and nu_2 -> 0 is exp(t_0)
  auto lifted = policy(6, 9);
  auto e = exp_series(var(nu(1), lifted) + var(nu(2), lifted) * Rational(1, 2));
  auto got = substitute(e, {{nu(1), var(t(0), p)}, {nu(2), RSeries(p)}}, p);
  CHECK(got == exp_series(t0));

  CHECK_THROWS_AS(substitute(n1, {{nu(1), var(t(0), policy(6, 6, 4, 2))}}, p), PolicyMismatch);
}

TEST_CASE("fixed_point") {
  auto p = policy(6, 6, 4, 2);
  auto t0 = var(t(0), p);
  std::function<RSeries(const RSeries&)> constant = [&](const RSeries&) { return t0; };
  CHECK(fixed_point(constant, RSeries(p)) == t0);
  std::function<RSeries(const RSeries&)> quad = [&](const RSeries& x) { return t0 + x * x; };
  CHECK(fixed_point(quad, RSeries(p)) == t0 + t0 * t0);
  std::function<RSeries(const RSeries&)> bad = [&](const RSeries& x) { return x + RSeries::one(p); };
  CHECK_THROWS_AS(fixed_point(bad, RSeries(p)), ContractionFailure);
}

TEST_CASE("coeff") {
  auto p = policy(6, 6);
  auto s = RSeries::one(p) + var(nu(2), p) * Rational(3);
  CHECK(s.coeff(Monomial::of(nu(2))) == 3);
  CHECK(s.coeff(Monomial::of(nu(3))) == 0);
}

TEST_CASE("ring axioms on random series") {
  std::mt19937 rng(7);
  auto p = policy(4, 6, 2, 2);
  for (int i = 0; i < 40; ++i) {
    auto a = random_series(rng, p, 6), b = random_series(rng, p, 6), c = random_series(rng, p, 6);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a.derive(nu(1)).derive(t(0)) == a.derive(t(0)).derive(nu(1)));
    auto x = random_series(rng, p, 5, false), y = random_series(rng, p, 5, false);
    CHECK(exp_series(x + y) == exp_series(x) * exp_series(y));
  }
}
