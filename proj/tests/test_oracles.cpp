#include "doctest.h"
#include "kfock/oracles.hpp"
#include "test_util.hpp"

using namespace kft;

namespace {

void require_report(const CheckReport& r) {
  for (const auto& c : r.results) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.pass);
  }
  CHECK(!r.results.empty());
}

}  // namespace

TEST_CASE("permutations") {
  Permutation s = Permutation::of_type({3, 1});
  CHECK(s.images == std::vector<int>{2, 3, 1, 4});
  CHECK(s.cycle_type() == Partition{3, 1});
  CHECK(s * s.inverse() == Permutation::identity(4));
}

TEST_CASE("fixed monomials and Sym^k(V_n)") {
  CHECK(oracle::monomials_fixed(2, 2, {2}) == 1);
  CHECK(oracle::monomials_fixed(2, 3, {2}) == 0);
  CHECK(oracle::monomials_fixed(3, 2, {2, 1}) == 2);
  CHECK_THROWS_AS(oracle::monomials_fixed(3, 2, {2}), InvalidArgument);
  CHECK_THROWS_AS(oracle::monomials_fixed(20, 20, Partition(20, 1)), BudgetExceeded);
  CHECK(oracle::sym_vn_classfn(3, 0) == ClassFunction::trivial(3));
}

TEST_CASE("double cosets and induced characters by brute force") {
  auto a = oracle::double_coset_brute({2, 1}, {2, 1});
  CHECK(a.count == 2);
  CHECK(a.sizes == std::vector<long>{2, 4});
  CHECK_THROWS_AS(oracle::double_coset_brute({8}, {8}), BudgetExceeded);
  std::vector<ClassFunction> tt{ClassFunction::trivial(1), ClassFunction::trivial(1)};
  CHECK(oracle::induced_char_brute({1, 1}, tt, Permutation::identity(2)) == 2);
  CHECK(oracle::induced_char_brute({1, 1}, tt, Permutation::of_type({2})) == 0);
}

TEST_CASE("J oracle low coefficients") {
  auto p = policy(6, 3, 0, 0);
  QSeries j = oracle::j_oracle(p, 3, 4);
  // 1/(2(1+q)) = 1/2 - q/2 + q^2/2 - ...
  CHECK(j.coeff(Monomial::of(nu(2))) == QRat(QPoly{frac(1, 2), frac(-1, 2), frac(1, 2), frac(-1, 2), frac(1, 2)}));
  CHECK(j.coeff(Monomial::of(nu(1))) == QRat(1));
}

TEST_CASE("string chain and closed formula") {
  auto p = policy(6, 6, 4, 3);
  PointTheory th(p);
  CHECK(oracle::string_chain(th, frac(1, 2), 3).constant_term() == 2);
  QSeries jq = th.j_function();
  const Rational q = frac(1, 3);
  CHECK(oracle::string_chain(th, q, 4) == eval_q(jq, q) * (1 / ((1 - q) * (1 - q) * (1 - q))));
  CHECK(oracle::corr_formula(p, {frac(1, 2)}).constant_term() == 2);
  CHECK(oracle::trivial_rep_genfun(p, 1).coeff(Monomial::of(nu(2))) == frac(1, 2));
}

TEST_CASE("oracle suites at reduced caps") {
  auto p = policy(6, 6, 4, 3);
  for (const auto& s : oracle_suite_names()) {
    CAPTURE(s);
    require_report(run_oracle_suite(s, 5, p));
  }
}
