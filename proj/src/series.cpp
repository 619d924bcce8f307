#include "kfock/series.hpp"

namespace kfock {

RSeries eval_q(const QSeries& s, const Rational& q0) {
  return s.map_coeffs([&](const QRat& f) { return f.eval(q0); });
}

RSeries q_coeff(const QSeries& s, int k) {
  return s.map_coeffs([&](const QRat& f) { return f.laurent_at_zero(k).at(k); });
}

RSeries residue_at_infinity(const QSeries& s) {
  return s.map_coeffs([](const QRat& f) { return f.residue_at_infinity(); });
}

QSeries plus_part(const QSeries& s) {
  return s.map_coeffs([](const QRat& f) { return f.plus_part(); });
}

QSeries to_qseries(const RSeries& s) {
  return s.map_coeffs([](const Rational& c) { return QRat(c); });
}

}  // namespace kfock
