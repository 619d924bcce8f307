#include "kfock/qfield.hpp"

#include <algorithm>

#include "kfock/errors.hpp"

namespace kfock {

QPoly::QPoly(const Rational& c) {
  if (!kfock::is_zero(c)) c_.push_back(c);
}

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(const Rational& c, int k) {
  if (k < 0) throw InvalidArgument("QPoly::monomial needs k >= 0");
  std::vector<Rational> v(static_cast<size_t>(k) + 1);
  v[k] = c;
  return QPoly(std::move(v));
}

Rational QPoly::coeff(int k) const {
  return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0);
}

int QPoly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!kfock::is_zero(c_[i])) return static_cast<int>(i);
  return 0;
}

Rational QPoly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

QPoly QPoly::monic() const {
  if (is_zero()) return *this;
  QPoly p = *this;
  const Rational inv = 1 / lead();
  for (auto& x : p.c_) x *= inv;
  return p;
}

QPoly QPoly::shifted(int k) const {
  if (is_zero()) return *this;
  QPoly p;
  if (k >= 0) {
    p.c_.assign(static_cast<size_t>(k), Rational(0));
    p.c_.insert(p.c_.end(), c_.begin(), c_.end());
  } else {
    if (valuation() < -k) throw DomainError("QPoly::shifted: not divisible by q^" + std::to_string(-k));
    p.c_.assign(c_.begin() - k, c_.end());
  }
  return p;
}

QPoly QPoly::reversed() const {
  QPoly p = *this;
  std::reverse(p.c_.begin(), p.c_.end());
  p.trim();
  return p;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const Rational& s) {
  if (kfock::is_zero(s)) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (kfock::is_zero(a.c_[i])) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return QPoly(std::move(r));
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {QPoly{}, a};
  std::vector<Rational> quot(static_cast<size_t>(a.degree() - b.degree() + 1));
  std::vector<Rational> rem = a.c_;
  const Rational inv = 1 / b.lead();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const Rational c = rem[k + b.degree()] * inv;
    quot[k] = c;
    if (kfock::is_zero(c)) continue;
    for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= c * b.c_[j];
  }
  rem.resize(static_cast<size_t>(std::max(b.degree(), 0)));
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[k];
    if (kfock::is_zero(c)) continue;
    if (!s.empty()) s += sgn(c) > 0 ? " + " : " - ";
    else if (sgn(c) < 0) s += "-";
    const Rational a = abs(c);
    if (k == 0 || a != 1) s += to_string(a) + (k > 0 ? "*" : "");
    if (k == 1) s += "q";
    if (k > 1) s += "q^" + std::to_string(k);
  }
  return s;
}

void QPoly::trim() {
  while (!c_.empty() && kfock::is_zero(c_.back())) c_.pop_back();
}

Rational LaurentExpansion::at(int k) const {
  const int i = k - lowest;
  return i >= 0 && i < static_cast<int>(coeffs.size()) ? coeffs[i] : Rational(0);
}

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

void QRat::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly(Rational(1));
    return;
  }
  if (den_.degree() > 0 && num_.degree() > 0) {
    QPoly g = QPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = QPoly::divmod(num_, g).first;
      den_ = QPoly::divmod(den_, g).first;
    }
  } else if (den_.degree() > 0 && num_.degree() == 0) {
    // constant numerator: only the scalar normalization below applies
  }
  if (den_.lead() != 1) {
    const Rational inv = 1 / den_.lead();
    num_ *= inv;
    den_ *= inv;
  }
}

Rational QRat::constant_value() const {
  if (!is_constant()) throw DomainError("rational function " + str() + " is not constant");
  return num_.coeff(0);
}

QRat& QRat::operator+=(const QRat& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

QRat& QRat::operator-=(const QRat& o) { return *this += -o; }

QRat& QRat::operator*=(const QRat& o) {
  if (is_zero() || o.is_zero()) return *this = QRat();
  if (o.is_constant()) {
    num_ *= o.num_.coeff(0);
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

QRat& QRat::operator/=(const QRat& o) {
  if (o.is_zero()) throw DomainError("division by the zero rational function");
  return *this *= QRat(o.den_, o.num_);
}

QRat QRat::pow(int e) const {
  if (e < 0) {
    if (is_zero()) throw DomainError("negative power of zero");
    return QRat(den_, num_).pow(-e);
  }
  QRat result(Rational(1)), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Rational QRat::eval(const Rational& q0) const {
  const Rational d = den_.eval(q0);
  if (kfock::is_zero(d)) throw DomainError("q = " + to_string(q0) + " is a pole of " + str());
  return num_.eval(q0) / d;
}

QRat QRat::at_reciprocal() const {
  // f(1/q) = q^(deg den - deg num) * rev(num) / rev(den)
  const int e = den_.degree() - std::max(num_.degree(), 0);
  QPoly n = num_.reversed(), d = den_.reversed();
  if (e >= 0)
    n = n.shifted(e);
  else
    d = d.shifted(-e);
  return QRat(std::move(n), std::move(d));
}

LaurentExpansion QRat::laurent_at_zero(int order) const {
  LaurentExpansion out;
  const int a = den_.valuation();
  out.lowest = -a;
  if (order < -a) return out;
  const QPoly reg = den_.shifted(-a);  // reg(0) != 0
  const Rational inv0 = 1 / reg.coeff(0);
  const int count = order + a + 1;
  out.coeffs.resize(static_cast<size_t>(count));
  for (int k = 0; k < count; ++k) {
    Rational c = num_.coeff(k);
    const int top = std::min(k, reg.degree());
    for (int i = 1; i <= top; ++i) c -= reg.coeffs()[i] * out.coeffs[k - i];
    out.coeffs[k] = c * inv0;
  }
  return out;
}

QRat QRat::plus_part() const {
  if (is_zero()) return {};
  const int a = den_.valuation();
  QPoly poly = QPoly::divmod(num_, den_).first;
  QPoly principal;
  if (a > 0) {
    const LaurentExpansion ex = laurent_at_zero(-1);
    std::vector<Rational> c(static_cast<size_t>(a));
    for (int i = 1; i <= a; ++i) c[a - i] = ex.at(-i);  // coefficient of q^{a-i}
    principal = QPoly(std::move(c));
  }
  return QRat(poly.shifted(a) + principal, QPoly::monomial(Rational(1), a));
}

Rational QRat::residue_at_infinity() const {
  if (is_zero()) return Rational(0);
  // g(u) = -f(1/u) / u^2
  QRat g = -at_reciprocal() * QRat(QPoly(Rational(1)), QPoly::monomial(Rational(1), 2));
  return g.residue_at_zero();
}

Rational QRat::residue_at_zero() const { return laurent_at_zero(-1).at(-1); }

std::string QRat::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace kfock
