#include <random>

#include "doctest.h"
#include "kfock/errors.hpp"
#include "kfock/qfield.hpp"

using namespace kfock;

namespace {

const QRat q = QRat::q();
QRat c(long n, long d = 1) { return QRat(frac(n, d)); }

}  // namespace

TEST_CASE("rational function arithmetic") {
  CHECK(1 / (1 - q) + 1 / (1 + q) == 2 / (1 - q * q));
  CHECK(q * (1 / q) == QRat(1));
  CHECK(1 / (q - 1) - 1 / q == 1 / (q * (q - 1)));
  CHECK_THROWS_AS(q / QRat(), DomainError);
  CHECK((2 / (2 * q - 2)).den() == QPoly{-1, 1});
}

TEST_CASE("plus_part") {
  CHECK((1 / (1 - q)).plus_part() == QRat());
  CHECK((q * q / (q - 1)).plus_part() == q + 1);
  CHECK((1 / (q * (1 - q))).plus_part() == 1 / q);
  CHECK((q.pow(3) + 1 / q.pow(2)).plus_part() == q.pow(3) + 1 / q.pow(2));
}

TEST_CASE("residue_at_infinity") {
  CHECK((1 / (q - 1)).residue_at_infinity() == -1);
  CHECK(QRat(1).residue_at_infinity() == 0);
  CHECK((1 / q).residue_at_infinity() == -1);
  CHECK(q.residue_at_infinity() == 0);
  CHECK((q * q / (q - 1)).residue_at_infinity() == -1);
}

TEST_CASE("laurent_at_zero and eval") {
  auto g = (1 / (1 - q)).laurent_at_zero(3);
  CHECK(g.lowest == 0);
  CHECK(g.coeffs == std::vector<Rational>{1, 1, 1, 1});
  auto h = (1 / q).laurent_at_zero(1);
  CHECK(h.lowest == -1);
  CHECK(h.at(-1) == 1);
  CHECK(h.at(0) == 0);
  auto k = (1 / (2 * (1 + q))).laurent_at_zero(2);
  CHECK(k.coeffs == std::vector<Rational>{frac(1, 2), frac(-1, 2), frac(1, 2)});

  CHECK((1 / (1 - q)).eval(frac(1, 2)) == 2);
  CHECK((1 / (1 - q * q)).eval(frac(1, 2)) == frac(4, 3));
  CHECK_THROWS_AS((1 / (1 - q)).eval(1), DomainError);
}

TEST_CASE("plus_part decomposition on random functions") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-4, 4), small(0, 3), root(2, 5);
  for (int i = 0; i < 60; ++i) {
    QPoly n;
    for (int k = 0; k <= 4; ++k) n += QPoly::monomial(coef(rng), k);
    if (n.is_zero()) continue;
    QRat f = QRat(n) / q.pow(small(rng));
    // one pole in C*: 1 - r q or 1 + q + q^2
    f /= (i % 2 == 0) ? (1 - c(root(rng)) * q) : (1 + q + q * q);
    f /= (1 - q).pow(small(rng));
    QRat g = f.plus_part();
    QRat rest = f - g;
    CHECK(g.plus_part() == g);
    CHECK(rest.plus_part() == QRat());
    CHECK(rest.laurent_at_zero(-1).coeffs.empty());
    CHECK(rest.num().degree() < rest.den().degree());
    // residue theorem: Res_0 + Res_inf + residues in C* = 0; for rest, Res_0 = 0
    // and residues in C* equal -Res_inf(rest); for g only 0 and infinity matter.
    CHECK(g.residue_at_zero() + g.residue_at_infinity() == 0);
    CHECK(f.residue_at_infinity() == g.residue_at_infinity() + rest.residue_at_infinity());
  }
}

TEST_CASE("residue theorem at rational poles") {
  // f = P/((q - a)(q - b) q^2) with a, b rational: sum of residues is zero
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-3, 3), pt(1, 5);
  for (int i = 0; i < 30; ++i) {
    Rational a = frac(pt(rng), 2), b = -frac(pt(rng), 3);
    QPoly n;
    for (int k = 0; k <= 5; ++k) n += QPoly::monomial(coef(rng), k);
    if (n.is_zero()) continue;
    QRat f = QRat(n) / ((q - QRat(a)) * (q - QRat(b)) * q * q);
    // simple poles: Res_a = lim (q-a) f
    Rational ra = (f * (q - QRat(a))).eval(a), rb = (f * (q - QRat(b))).eval(b);
    CHECK(ra + rb + f.residue_at_zero() + f.residue_at_infinity() == 0);
  }
}
