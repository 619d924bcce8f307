#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "kfock/rational.hpp"

namespace kfock {

/// Dense univariate polynomial in q over the rationals; index = power of q.
/// The leading coefficient is nonzero unless the polynomial is zero.
class QPoly {
 public:
  QPoly() = default;
  QPoly(const Rational& c);  // NOLINT(google-explicit-constructor): constants embed
  explicit QPoly(std::vector<Rational> coeffs);
  QPoly(std::initializer_list<Rational> coeffs) : QPoly(std::vector<Rational>(coeffs)) {}

  /// c * q^k.
  static QPoly monomial(const Rational& c, int k);
  /// The polynomial q.
  static QPoly q() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  const Rational& lead() const { return c_.back(); }
  /// Power of the lowest nonzero term (0 for the zero polynomial).
  int valuation() const;

  Rational eval(const Rational& x) const;
  QPoly monic() const;
  /// Multiply by q^k (k >= 0) or divide exactly by q^{-k} (k < 0).
  QPoly shifted(int k) const;
  /// q^deg * p(1/q).
  QPoly reversed() const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const Rational& s);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator-(QPoly a) { return a *= Rational(-1); }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division: a = quotient*b + remainder, deg remainder < deg b.
  static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
  /// Monic gcd (zero if both are zero).
  static QPoly gcd(QPoly a, QPoly b);

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Laurent coefficients c_k for k = lowest, lowest+1, ...
struct LaurentExpansion {
  int lowest = 0;
  std::vector<Rational> coeffs;

  /// Coefficient of q^k (zero outside the stored window).
  Rational at(int k) const;
};

/// Exact rational function num/den in q. Canonical form: gcd(num, den) = 1,
/// den monic; zero is 0/1. Equality is structural.
class QRat {
 public:
  QRat() : den_(Rational(1)) {}
  QRat(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  QRat(long c) : QRat(Rational(c)) {}                       // NOLINT(google-explicit-constructor)
  QRat(QPoly num, QPoly den);
  QRat(const QPoly& p) : QRat(p, QPoly(Rational(1))) {}     // NOLINT(google-explicit-constructor)

  static QRat q() { return QRat(QPoly::q()); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.degree() <= 0; }
  /// The value of a constant function; throws DomainError otherwise.
  Rational constant_value() const;

  QRat& operator+=(const QRat& o);
  QRat& operator-=(const QRat& o);
  QRat& operator*=(const QRat& o);
  QRat& operator/=(const QRat& o);
  friend QRat operator+(QRat a, const QRat& b) { return a += b; }
  friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
  friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
  friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
  friend QRat operator-(const QRat& a) { return QRat(-a.num_, a.den_); }
  friend bool operator==(const QRat& a, const QRat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// f^e for any integer e (negative powers need f != 0).
  QRat pow(int e) const;
  /// Exact value at q0; DomainError if q0 is a pole.
  Rational eval(const Rational& q0) const;
  /// f(1/q).
  QRat at_reciprocal() const;

  /// Laurent coefficients at q = 0 from the pole order up to q^order inclusive.
  LaurentExpansion laurent_at_zero(int order) const;
  /// The Laurent polynomial [f]_+ keeping the principal part at 0 and the
  /// polynomial part at infinity; f - [f]_+ has poles only in C* and vanishes at infinity.
  QRat plus_part() const;
  /// Res_{q=infinity} f dq, computed as Res_{u=0} of -f(1/u)/u^2 du.
  Rational residue_at_infinity() const;
  /// Res_{q=0} f dq.
  Rational residue_at_zero() const;
  /// True when q = 0 is not a pole.
  bool regular_at_zero() const { return !kfock::is_zero(den_.coeff(0)); }

  std::string str() const;

 private:
  void normalize();
  QPoly num_;
  QPoly den_;
};

inline bool is_zero(const QRat& r) { return r.is_zero(); }

}  // namespace kfock
