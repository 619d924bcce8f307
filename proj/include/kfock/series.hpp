#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kfock/errors.hpp"
#include "kfock/monomial.hpp"
#include "kfock/qfield.hpp"
#include "kfock/rational.hpp"

namespace kfock {

/// Truncated multivariate series over the coefficient field C (Rational or
/// QRat). Terms outside the policy are dropped eagerly; zero coefficients are
/// never stored.
template <class C>
class Series {
 public:
  using Terms = std::map<Monomial, C, MonomialOrder>;

  Series() = default;
  explicit Series(TruncationPolicy policy) : policy_(policy) { policy_.validate(); }

  static Series constant(const C& c, TruncationPolicy policy) {
    Series s(policy);
    s.add_term(Monomial{}, c);
    return s;
  }
  static Series one(TruncationPolicy policy) { return constant(C(1), policy); }
  static Series variable(VarId v, TruncationPolicy policy) { return term(Monomial::of(v), C(1), policy); }
  static Series term(const Monomial& m, const C& c, TruncationPolicy policy) {
    Series s(policy);
    for (const auto& [v, e] : m.factors()) s.require_var(v);
    s.add_term(m, c);
    return s;
  }

  const TruncationPolicy& policy() const { return policy_; }
  const Terms& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  C coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? C() : it->second;
  }
  C constant_term() const { return coeff(Monomial{}); }

  /// Adds c*m in place; silently drops m when the policy does not admit it.
  void add_term(const Monomial& m, const C& c) {
    if (kfock::is_zero(c) || !policy_.admits(m)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (kfock::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Lowest t-degree among stored terms; -1 for the zero series.
  int min_t_degree() const {
    int best = -1;
    for (const auto& [m, c] : terms_)
      if (best < 0 || m.t_degree() < best) best = m.t_degree();
    return best;
  }

  Series& operator+=(const Series& o) {
    check_policy(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Series& operator-=(const Series& o) {
    check_policy(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Series& operator*=(const C& s) {
    if (kfock::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator-(Series a) { return a *= C(-1); }
  friend Series operator*(Series a, const C& s) { return a *= s; }
  friend Series operator*(const C& s, Series a) { return a *= s; }

  friend Series operator*(const Series& a, const Series& b) {
    a.check_policy(b);
    Series r(a.policy_);
    const int D = a.policy_.max_weight, T = a.policy_.max_t_degree;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        if (ma.nu_weight() + mb.nu_weight() > D || ma.t_degree() + mb.t_degree() > T) continue;
        r.add_term(ma * mb, ca * cb);
      }
    }
    return r;
  }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  friend bool operator==(const Series& a, const Series& b) {
    return a.policy_ == b.policy_ && a.terms_ == b.terms_;
  }

  /// Formal partial derivative.
  Series derive(VarId v) const {
    Series r(policy_);
    for (const auto& [m, c] : terms_) {
      const int e = m.exponent(v);
      if (e > 0) r.add_term(m.lowered(v), c * C(e));
    }
    return r;
  }

  /// Re-truncates (or embeds) into another policy. Every variable present
  /// must exist in the target.
  Series with_policy(const TruncationPolicy& target) const {
    Series r(target);
    for (const auto& [m, c] : terms_) {
      for (const auto& [v, e] : m.factors()) r.require_var(v);
      r.add_term(m, c);
    }
    return r;
  }

  /// Applies f to each coefficient; zero results are dropped.
  template <class F>
  auto map_coeffs(F&& f) const -> Series<std::decay_t<decltype(f(std::declval<const C&>()))>> {
    Series<std::decay_t<decltype(f(std::declval<const C&>()))>> r(policy_);
    for (const auto& [m, c] : terms_) r.add_term(m, f(c));
    return r;
  }

  /// Keeps only the terms for which pred(monomial) holds.
  template <class P>
  Series filter(P&& pred) const {
    Series r(policy_);
    for (const auto& [m, c] : terms_)
      if (pred(m)) r.terms_.emplace(m, c);
    return r;
  }

  void require_var(VarId v) const {
    if (!policy_.contains(v)) throw PolicyMismatch("variable " + v.name() + " is outside the truncation policy");
  }

 private:
  void check_policy(const Series& o) const {
    if (!(policy_ == o.policy_)) throw PolicyMismatch("series have different truncation policies");
  }

  TruncationPolicy policy_;
  Terms terms_;
};

using RSeries = Series<Rational>;
using QSeries = Series<QRat>;

/// exp(a) = sum a^m/m!; a must have zero constant term.
template <class C>
Series<C> exp_series(const Series<C>& a) {
  if (!kfock::is_zero(a.constant_term())) throw DomainError("exp_series needs a zero constant term");
  Series<C> sum = Series<C>::one(a.policy());
  Series<C> power = sum;
  for (long m = 1;; ++m) {
    power = power * a;
    if (power.is_zero()) break;
    power *= C(frac(1, m));
    sum += power;
  }
  return sum;
}

/// Evaluates a at the assignment; unassigned variables are kept. The result
/// lives in `target`, which must contain every variable that survives.
template <class C>
Series<C> substitute(const Series<C>& a, const std::map<VarId, Series<C>>& assignment,
                     const TruncationPolicy& target) {
  for (const auto& [v, s] : assignment) {
    a.require_var(v);
    if (!(s.policy() == target)) throw PolicyMismatch("substituted series must use the target policy");
  }
  std::map<VarId, std::vector<Series<C>>> powers;
  auto power_of = [&](VarId v, int e) -> const Series<C>& {
    auto& cache = powers[v];
    if (cache.empty()) {
      cache.push_back(Series<C>::one(target));
      auto it = assignment.find(v);
      cache.push_back(it != assignment.end() ? it->second : Series<C>::variable(v, target));
    }
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };
  Series<C> result(target);
  for (const auto& [m, c] : a.terms()) {
    Series<C> t = Series<C>::constant(c, target);
    for (const auto& [v, e] : m.factors()) {
      t = t * power_of(v, e);
      if (t.is_zero()) break;
    }
    result += t;
  }
  return result;
}

/// Iterates x -> F(x) from seed until two iterates agree. F must raise the
/// lowest t-degree of the discrepancy every round.
template <class C>
Series<C> fixed_point(const std::function<Series<C>(const Series<C>&)>& F, const Series<C>& seed) {
  Series<C> x = seed;
  int last_order = -1;
  const int rounds = x.policy().max_t_degree + 2;
  for (int i = 0; i <= rounds; ++i) {
    Series<C> y = F(x);
    if (y == x) return x;
    const int order = (y - x).min_t_degree();
    if (i > 0 && order <= last_order)
      throw ContractionFailure("fixed-point iteration is not t-adically contracting (order " + std::to_string(order) +
                               " after round " + std::to_string(i) + ")");
    last_order = order;
    x = std::move(y);
  }
  throw ContractionFailure("fixed-point iteration did not settle within " + std::to_string(rounds + 1) + " rounds");
}

/// Coefficient-wise evaluation at q = q0.
RSeries eval_q(const QSeries& s, const Rational& q0);
/// Coefficient-wise [q^k] of the Laurent expansion at q = 0.
RSeries q_coeff(const QSeries& s, int k);
/// Coefficient-wise Res_{q=infinity} f dq.
RSeries residue_at_infinity(const QSeries& s);
/// Coefficient-wise plus_part.
QSeries plus_part(const QSeries& s);
/// Embeds rational coefficients as constant rational functions.
QSeries to_qseries(const RSeries& s);

}  // namespace kfock
