#include "doctest.h"
#include "kfock/fock.hpp"
#include "test_util.hpp"

using namespace kft;

TEST_CASE("rings") {
  KRingData pt = KRingData::point();
  pt.validate();
  KRingData r2 = KRingData::synthetic_rank2();
  r2.validate();
  auto inv = r2.inverse_pairing();
  CHECK(inv[0][0] == 2);
  CHECK(inv[0][1] == -1);
  CHECK(inv[1][1] == 1);
  KRingData bad = KRingData::point();
  bad.pairing = {{0}};
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
}

TEST_CASE("creation and annihilation") {
  auto p = policy(6, 6, 0, 0);
  KRingData pt = KRingData::point();
  FockElement one{RSeries::one(p), pt};
  FockElement e = create(create(one, 2, 1), 2, 1);
  CHECK(e.series == var(nu(2), p) * var(nu(2), p));
  FockElement d = annihilate(e, 2, {Rational(1)});
  CHECK(d.series == var(nu(2), p) * Rational(4));
  for (int m = 1; m <= 4; ++m)
    for (int l = 1; l <= 4; ++l) CHECK(commutator_check(pt, m, l, 1, 1, p));
  KRingData r2 = KRingData::synthetic_rank2();
  for (int a = 1; a <= 2; ++a)
    for (int b = 1; b <= 2; ++b) CHECK(commutator_check(r2, 3, 3, a, b, p));
}

TEST_CASE("spanning monomials and point embedding") {
  CHECK(spanning_monomials(1, 6, 4).size() == 1 + 1 + 2 + 3 + 5);
  CHECK(spanning_monomials(2, 6, 1).size() == 3);
  auto p = policy(6, 6, 0, 0);
  FockElement e = point_embed(ClassFunction::p_n(3), p);
  CHECK(e.series == var(nu(3), p));
  CHECK(pairing_nu1_nu1(KRingData::point(), p) == var(nu(1), p) * var(nu(1), p));
  CHECK(psi2_nu2_with_unit(KRingData::point(), p) == var(nu(2), p));
}
