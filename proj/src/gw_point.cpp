#include "kfock/gw_point.hpp"

#include <algorithm>
#include <functional>

#include "kfock/errors.hpp"

namespace kfock {

// ---------------------------------------------------------------- Slot

Slot Slot::geom(const Rational& q0) { return {Kind::Geom, q0, 0}; }

Slot Slot::pow_l(int j) {
  if (j < 0) throw InvalidArgument("negative descendant exponents are not supported");
  return {Kind::PowL, Rational(0), j};
}

Slot Slot::pow_lm1(int k) {
  if (k < 0) throw InvalidArgument("negative (L-1) exponents are not supported");
  return {Kind::PowLm1, Rational(0), k};
}

Slot Slot::canonical() const {
  if (kind == Kind::Geom && kfock::is_zero(q)) return one();
  if ((kind == Kind::PowL || kind == Kind::PowLm1) && j == 0) return one();
  return *this;
}

Rational Slot::at_one() const {
  switch (kind) {
    case Kind::One:
    case Kind::PowL:
      return 1;
    case Kind::Geom:
      return 1 / (1 - q);
    case Kind::PowLm1:
      return j == 0 ? 1 : 0;
  }
  return 0;
}

std::string Slot::str() const {
  switch (kind) {
    case Kind::One:
      return "1";
    case Kind::Geom:
      return "1/(1-(" + to_string(q) + ")L)";
    case Kind::PowL:
      return "L^" + std::to_string(j);
    case Kind::PowLm1:
      return "(L-1)^" + std::to_string(j);
  }
  return "?";
}

bool operator<(const Slot& a, const Slot& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.j != b.j) return a.j < b.j;
  return a.q < b.q;
}

void guard_q(const Rational& q0, int max_nu_index) {
  if (q0 == 1) throw DomainError("q = 1 is a pole of the correlator formula");
  for (int r = 2; r <= max_nu_index; ++r)
    if (power(q0, static_cast<unsigned>(r)) == 1)
      throw DomainError("q = " + to_string(q0) + " is a root of unity of order <= R = " + std::to_string(max_nu_index));
}

std::vector<Rational> default_q_samples(int max_nu_index) {
  std::vector<Rational> out;
  for (const Rational& q : {frac(1, 2), frac(1, 3), frac(2, 5), frac(-1, 2)}) {
    try {
      guard_q(q, max_nu_index);
      out.push_back(q);
    } catch (const DomainError&) {
    }
  }
  return out;
}

// ---------------------------------------------------------------- closed forms

namespace {

Monomial nu_mono(int r) { return Monomial::of(VarId::nu(r)); }

QPoly one_minus_q_pow(int k, bool reversed_sign) {
  // 1 - q^k, or q^k - 1 when reversed_sign
  QPoly p = QPoly::monomial(Rational(reversed_sign ? 1 : -1), k);
  p += QPoly(Rational(reversed_sign ? -1 : 1));
  return p;
}

// prod_k (k^{m_k} m_k!)^{-1} for a nu-monomial
Rational exp_weight(const Monomial& m) {
  Integer d = 1;
  for (const auto& [v, e] : m.factors()) {
    Integer ke;
    mpz_ui_pow_ui(ke.get_mpz_t(), v.index, static_cast<unsigned long>(e));
    d *= ke * factorial(static_cast<unsigned long>(e));
  }
  return Rational(Integer(1), d);
}

QPoly den_product(const Monomial& m, bool reversed_sign) {
  QPoly d(Rational(1));
  for (const auto& [v, e] : m.factors())
    for (int i = 0; i < e; ++i) d = d * one_minus_q_pow(v.index, reversed_sign);
  return d;
}

RSeries euler_nu1(const RSeries& s) {
  return s.derive(VarId::nu(1)) * RSeries::variable(VarId::nu(1), s.policy());
}

std::string mismatch(const RSeries& a, const RSeries& b) {
  RSeries d = a - b;
  if (d.is_zero()) return {};
  const auto& [m, c] = *d.terms().begin();
  std::string name;
  for (const auto& [v, e] : m.factors()) name += v.name() + (e > 1 ? "^" + std::to_string(e) : "") + " ";
  return std::to_string(d.size()) + " differing terms, first at [" + name + "] by " + to_string(c);
}

}  // namespace

PointTheory::PointTheory(TruncationPolicy policy) : policy_(policy) { policy_.validate(); }

const QSeries& PointTheory::j_function() {
  std::lock_guard lock(mutex_);
  if (!j_) {
    QSeries j(policy_);
    const QPoly one_minus_q{1, -1};
    for (const Monomial& m : spanning_monomials(1, policy_.max_nu_index, policy_.max_weight))
      j.add_term(m, QRat(one_minus_q * exp_weight(m), den_product(m, false)));
    j_ = std::make_unique<QSeries>(std::move(j));
  }
  return *j_;
}

const QSeries& PointTheory::s_matrix() {
  std::lock_guard lock(mutex_);
  if (!s_) {
    QSeries s(policy_);
    for (const Monomial& m : spanning_monomials(1, policy_.max_nu_index, policy_.max_weight))
      s.add_term(m, QRat(QPoly(exp_weight(m)), den_product(m, true)));
    s_ = std::make_unique<QSeries>(std::move(s));
  }
  return *s_;
}

const RSeries& PointTheory::metric_g() {
  std::lock_guard lock(mutex_);
  if (!g_) {
    RSeries x(policy_);
    if (policy_.max_nu_index >= 1) x += RSeries::variable(VarId::nu(1), policy_);
    for (int k = 2; k <= policy_.max_nu_index; ++k) x += RSeries::variable(VarId::nu(k), policy_) * frac(1, k);
    g_ = std::make_unique<RSeries>(exp_series(x));
  }
  return *g_;
}

const RSeries& PointTheory::e0() {
  std::lock_guard lock(mutex_);
  if (!e0_) {
    RSeries x(policy_);
    for (int r = 1; r <= policy_.max_nu_index; ++r) x.add_term(nu_mono(r), frac(1, r));
    e0_ = std::make_unique<RSeries>(exp_series(x));
  }
  return *e0_;
}

RSeries PointTheory::e_at(const Rational& q0) {
  guard_q(q0, policy_.max_nu_index);
  RSeries x(policy_);
  for (int r = 1; r <= policy_.max_nu_index; ++r) {
    const Rational qr = power(q0, static_cast<unsigned>(r));
    x.add_term(nu_mono(r), qr / (r * (1 - qr)));
  }
  return exp_series(x);
}

const std::vector<RSeries>& PointTheory::e_exponent(int upto, bool tilde) {
  auto& ex = tilde ? etilde_exp_ : e_exp_;
  if (static_cast<int>(ex.size()) > upto) return ex;
  ex.assign(static_cast<size_t>(upto) + 1, RSeries(policy_));
  const QRat q = QRat::q();
  for (int r = 1; r <= policy_.max_nu_index; ++r) {
    if (!tilde) {
      for (int i = r; i <= upto; i += r) ex[i].add_term(nu_mono(r), frac(1, r));
      continue;
    }
    // x~^r / (1 - x~^r) with x~ = x/(1+x) is x^r / ((1+x)^r - x^r)
    const QRat f = q.pow(r) / ((1 + q).pow(r) - q.pow(r));
    const LaurentExpansion le = f.laurent_at_zero(upto);
    for (int i = 1; i <= upto; ++i) ex[i].add_term(nu_mono(r), le.at(i) / r);
  }
  return ex;
}

void PointTheory::extend_taylor(std::vector<RSeries>& cache, const std::vector<RSeries>& x, int upto) {
  // E = exp(X) with X_0 = 0: i E_i = sum_{j=1}^{i} j X_j E_{i-j}
  if (cache.empty()) cache.push_back(RSeries::one(policy_));
  for (int i = static_cast<int>(cache.size()); i <= upto; ++i) {
    RSeries acc(policy_);
    for (int j = 1; j <= i; ++j)
      if (!x[j].is_zero()) acc += x[j] * cache[i - j] * Rational(j);
    cache.push_back(acc * frac(1, i));
  }
}

const RSeries& PointTheory::e_taylor(int i) {
  std::lock_guard lock(mutex_);
  if (i < 0) throw InvalidArgument("negative Taylor index");
  if (static_cast<int>(e_tay_.size()) <= i) {
    const auto& x = e_exponent(std::max(i, 2 * static_cast<int>(e_exp_.size())), false);
    extend_taylor(e_tay_, x, i);
  }
  return e_tay_[i];
}

const RSeries& PointTheory::etilde_taylor(int i) {
  std::lock_guard lock(mutex_);
  if (i < 0) throw InvalidArgument("negative Taylor index");
  if (static_cast<int>(etilde_tay_.size()) <= i) {
    const auto& x = e_exponent(std::max(i, 2 * static_cast<int>(etilde_exp_.size())), true);
    extend_taylor(etilde_tay_, x, i);
  }
  return etilde_tay_[i];
}

// ---------------------------------------------------------------- correlator engine

RSeries PointTheory::correlator(std::vector<Slot> slots) {
  for (auto& s : slots) {
    s = s.canonical();
    if (s.kind == Slot::Kind::Geom) guard_q(s.q, policy_.max_nu_index);
  }
  std::sort(slots.begin(), slots.end());
  std::lock_guard lock(mutex_);
  auto it = memo_.find(slots);
  if (it != memo_.end()) return it->second;
  const auto ones = std::count_if(slots.begin(), slots.end(), [](const Slot& s) { return s.kind == Slot::Kind::One; });
  RSeries value = (ones >= 2 && slots.size() >= 3) ? closed_form(slots) : string_recursion(slots);
  memo_.emplace(slots, value);
  return value;
}

RSeries PointTheory::closed_form(const std::vector<Slot>& slots) {
  // E0 * prod_geom e(g)/(1-g) * Z! [z^Z] exp(c z) prod_slots P_slot(z), Z = n - 3
  const int Z = static_cast<int>(slots.size()) - 3;
  Rational c = 1;
  RSeries pref = e0();
  for (const Slot& s : slots) {
    if (s.kind != Slot::Kind::Geom) continue;
    c += s.q / (1 - s.q);
    pref = pref * e_at(s.q) * (1 / (1 - s.q));
  }
  std::vector<RSeries> acc;
  Rational ci = 1;
  for (int i = 0; i <= Z; ++i) {
    acc.push_back(RSeries::constant(ci / Rational(factorial(static_cast<unsigned long>(i))), policy_));
    ci *= c;
  }
  for (const Slot& s : slots) {
    if (s.kind != Slot::Kind::PowL && s.kind != Slot::Kind::PowLm1) continue;
    std::vector<RSeries> p;
    for (int i = 0; i <= std::min(s.j, Z); ++i) {
      RSeries coef(policy_);
      if (s.kind == Slot::Kind::PowL) {
        // [q^{j-i}] e(q)/(1-q)^{i+1} = sum_l e_l C(j-l, i)
        for (int l = 0; l <= s.j - i; ++l)
          coef += e_taylor(l) * Rational(binomial(static_cast<unsigned long>(s.j - l), static_cast<unsigned long>(i)));
      } else {
        coef = etilde_taylor(s.j - i);
      }
      p.push_back(coef * Rational(Integer(1), factorial(static_cast<unsigned long>(i))));
    }
    std::vector<RSeries> next(static_cast<size_t>(Z) + 1, RSeries(policy_));
    for (int a = 0; a <= Z; ++a) {
      if (acc[a].is_zero()) continue;
      for (int b = 0; b < static_cast<int>(p.size()) && a + b <= Z; ++b) next[a + b] += acc[a] * p[b];
    }
    acc = std::move(next);
  }
  return pref * acc[Z] * Rational(factorial(static_cast<unsigned long>(Z)));
}

RSeries PointTheory::q_correction(const std::vector<Slot>& slots) {
  RSeries q(policy_);
  if (slots.size() == 2) {
    q = RSeries::constant(slots[0].at_one() * slots[1].at_one(), policy_);
  } else if (slots.size() == 1) {
    if (policy_.max_nu_index >= 1) q = RSeries::variable(VarId::nu(1), policy_) * slots[0].at_one();
  } else if (slots.empty()) {
    q = (pairing_nu1_nu1(ring_, policy_) + psi2_nu2_with_unit(ring_, policy_)) * frac(1, 2);
  }
  return q;
}

RSeries PointTheory::string_recursion(const std::vector<Slot>& slots) {
  // <X, 1> = K <X> + sum_i <X with t_i -> (t_i(L) - t_i(1))/(L-1)>' + Q_n, K = 1 + sum_geom q/(1-q);
  // geometric slots are eigenvectors of the difference quotient and are folded into K.
  Rational K = 1;
  for (const Slot& s : slots)
    if (s.kind == Slot::Kind::Geom) K += s.q / (1 - s.q);
  if (kfock::is_zero(K))
    throw DomainError("string recursion is undetermined here: 1 + sum q_i/(1-q_i) = 0");
  std::vector<Slot> up = slots;
  up.push_back(Slot::one());
  RSeries value = correlator(up);
  for (size_t i = 0; i < slots.size(); ++i) {
    const Slot& s = slots[i];
    std::vector<Slot> repl = slots;
    if (s.kind == Slot::Kind::PowL) {
      for (int p = 0; p < s.j; ++p) {
        repl[i] = Slot::pow_l(p);
        value -= correlator(repl);
      }
    } else if (s.kind == Slot::Kind::PowLm1) {
      repl[i] = Slot::pow_lm1(s.j - 1);
      value -= correlator(repl);
    }
  }
  value -= q_correction(slots);
  return value * (1 / K);
}

RSeries PointTheory::correlator(const std::vector<Insertion>& inputs) {
  RSeries total(policy_);
  std::vector<Slot> slots(inputs.size());
  std::function<void(size_t, const RSeries&)> rec = [&](size_t i, const RSeries& coef) {
    if (coef.is_zero()) return;
    if (i == inputs.size()) {
      total += coef * correlator(slots);
      return;
    }
    for (const auto& [slot, c] : inputs[i].terms) {
      slots[i] = slot;
      rec(i + 1, coef * c);
    }
  };
  rec(0, RSeries::one(policy_));
  return total;
}

QSeries PointTheory::corr_one_geom_symbolic() {
  const QRat q = QRat::q();
  QSeries x(policy_);
  for (int r = 1; r <= policy_.max_nu_index; ++r) x.add_term(nu_mono(r), q.pow(r) / (QRat(Rational(r)) * (1 - q.pow(r))));
  return to_qseries(e0()) * exp_series(x) * (1 / (1 - q));
}

RSeries PointTheory::corr_two_ones(const std::vector<Rational>& qs) {
  if (qs.empty()) throw InvalidArgument("corr_two_ones needs at least one q");
  std::vector<Slot> slots;
  for (const auto& q : qs) {
    guard_q(q, policy_.max_nu_index);
    slots.push_back(Slot::geom(q));
  }
  slots.push_back(Slot::one());
  slots.push_back(Slot::one());
  return correlator(slots);
}

RSeries PointTheory::corr_poly_insertions(const std::vector<int>& exps) {
  std::vector<Slot> slots;
  for (int j : exps) {
    if (j > 64) throw BudgetExceeded("descendant exponent above 64");
    slots.push_back(Slot::pow_l(j));
  }
  slots.push_back(Slot::one());
  slots.push_back(Slot::one());
  return correlator(slots);
}

RSeries PointTheory::corr_strip_ones(const std::vector<Rational>& qs, int ones) {
  if (ones < 0) throw InvalidArgument("negative number of unit insertions");
  std::vector<Slot> slots;
  for (const auto& q : qs) {
    guard_q(q, policy_.max_nu_index);
    slots.push_back(Slot::geom(q));
  }
  for (int i = 0; i < ones; ++i) slots.push_back(Slot::one());
  return correlator(slots);
}

RSeries PointTheory::two_point_from_s(const Rational& q1, const Rational& q2) {
  guard_q(q1, policy_.max_nu_index);
  guard_q(q2, policy_.max_nu_index);
  const Rational pre = 1 - q1 * q2;
  if (kfock::is_zero(pre)) throw DomainError("two_point_from_s: q1 * q2 = 1 makes the identity degenerate");
  // S(nu, x) at x = 1/q_i; q_i = 0 means x = infinity where S = 1
  auto s_at_inverse = [&](const Rational& q) {
    if (kfock::is_zero(q)) return RSeries::one(policy_);
    return eval_q(s_matrix(), 1 / q);
  };
  RSeries lhs = metric_g() * s_at_inverse(q1) * s_at_inverse(q2);
  return (lhs - RSeries::one(policy_)) * (1 / pre);
}

namespace {

// s_i = [x^i] S(nu, 1/x)
RSeries s_inverse_coeff(PointTheory& th, int i) {
  const QSeries& s = th.s_matrix();
  return s.map_coeffs([&](const QRat& f) { return f.at_reciprocal().laurent_at_zero(i).at(i); });
}

}  // namespace

RSeries PointTheory::two_point_poly_from_s(int a, int b) {
  if (a < 0 || b < 0) throw InvalidArgument("negative exponent");
  RSeries out(policy_);
  const RSeries& G = metric_g();
  for (int j = 0; j <= std::min(a, b); ++j) {
    out += G * s_inverse_coeff(*this, a - j) * s_inverse_coeff(*this, b - j);
    if (a == j && b == j) out -= RSeries::one(policy_);
  }
  return out;
}

RSeries PointTheory::two_point_mixed_from_s(const Rational& x, int b) {
  guard_q(x, policy_.max_nu_index);
  RSeries sx = kfock::is_zero(x) ? RSeries::one(policy_) : eval_q(s_matrix(), 1 / x);
  RSeries out(policy_);
  Rational xj = 1;
  for (int j = 0; j <= b; ++j) {
    RSeries term = metric_g() * sx * s_inverse_coeff(*this, b - j);
    if (j == b) term -= RSeries::one(policy_);
    out += term * xj;
    xj *= x;
  }
  return out;
}

RSeries PointTheory::one_point_from_j(int j) {
  RSeries c = q_coeff(j_function(), j);
  if (j == 0) {
    c -= RSeries::one(policy_);
    if (policy_.max_nu_index >= 1) c -= RSeries::variable(VarId::nu(1), policy_);
  }
  if (j == 1) c += RSeries::one(policy_);
  return c;
}

RSeries PointTheory::zero_point() {
  // 1/2 <1-L+nu_1, 1-L+nu_1>_{0,2} - 1/2 (psi^2(nu_2), 1)
  const RSeries one = RSeries::one(policy_);
  const RSeries a = one + (policy_.max_nu_index >= 1 ? RSeries::variable(VarId::nu(1), policy_) : RSeries(policy_));
  RSeries quad = a * a * two_point_poly_from_s(0, 0) - a * two_point_poly_from_s(0, 1) * Rational(2) +
                 two_point_poly_from_s(1, 1);
  return (quad - psi2_nu2_with_unit(ring_, policy_)) * frac(1, 2);
}

RSeries PointTheory::quantum_product_constant() {
  RSeries x(policy_);
  if (policy_.max_nu_index >= 1) x -= RSeries::variable(VarId::nu(1), policy_);
  for (int k = 2; k <= policy_.max_nu_index; ++k) x -= RSeries::variable(VarId::nu(k), policy_) * frac(1, k);
  return correlator({Slot::one(), Slot::one(), Slot::one()}) * exp_series(x);
}

PointTheory& PointTheory::lifted(int t_degree) {
  std::lock_guard lock(mutex_);
  auto& p = lifted_[t_degree];
  if (!p) {
    TruncationPolicy l = policy_;
    l.max_weight += t_degree;
    l.max_t_degree = t_degree;
    p = std::make_unique<PointTheory>(l);
  }
  return *p;
}

std::vector<RSeries> PointTheory::standard_t() const {
  std::vector<RSeries> t;
  for (int k = 0; k <= policy_.max_t_index; ++k) t.push_back(RSeries::variable(VarId::t(k), policy_));
  return t;
}

namespace {

void check_t(const std::vector<RSeries>& t, const TruncationPolicy& p) {
  if (static_cast<int>(t.size()) > p.max_t_index + 1)
    throw InvalidArgument("t(L) uses more (L-1)^k terms than K_t allows");
  for (const auto& c : t)
    if (!(c.policy() == p)) throw PolicyMismatch("t coefficients must use the theory's policy");
}

std::vector<RSeries> embed_all(const std::vector<RSeries>& t, const TruncationPolicy& p) {
  std::vector<RSeries> out;
  for (const auto& c : t) out.push_back(c.with_policy(p));
  return out;
}

}  // namespace

RSeries PointTheory::s_dress_at_one(const std::vector<RSeries>& t) {
  check_t(t, policy_);
  RSeries x(policy_);
  if (policy_.max_nu_index >= 1) x -= RSeries::variable(VarId::nu(1), policy_);
  for (int k = 2; k <= policy_.max_nu_index; ++k) x -= RSeries::variable(VarId::nu(k), policy_) * frac(1, k);
  const RSeries g_inv = exp_series(x);
  RSeries out(policy_);
  for (size_t k = 0; k < t.size(); ++k) {
    if (t[k].is_zero()) continue;
    out += t[k] * correlator({Slot::one(), Slot::one(), Slot::pow_lm1(static_cast<int>(k))});
  }
  return out * g_inv;
}

RSeries PointTheory::s_dress_at_one_projection(const std::vector<RSeries>& t) {
  check_t(t, policy_);
  const QRat qm1 = QRat::q() - 1;
  RSeries out(policy_);
  for (size_t k = 0; k < t.size(); ++k) {
    if (t[k].is_zero()) continue;
    QSeries sk = s_matrix() * qm1.pow(static_cast<int>(k));
    out += t[k] * eval_q(plus_part(sk), 1);
  }
  return out;
}

RSeries PointTheory::tau_fixed_point(const std::vector<RSeries>& t) {
  check_t(t, policy_);
  PointTheory& L = lifted(policy_.max_t_degree);
  const RSeries dressed = L.s_dress_at_one(embed_all(t, L.policy()));
  if (policy_.max_nu_index < 1) return dressed.with_policy(policy_);
  std::function<RSeries(const RSeries&)> F = [&](const RSeries& x) {
    return substitute(dressed, {{VarId::nu(1), x}}, policy_);
  };
  return fixed_point(F, RSeries(policy_));
}

RSeries PointTheory::drop_nu1(const RSeries& s) {
  return s.filter([](const Monomial& m) { return m.exponent(VarId::nu(1)) == 0; });
}

RSeries PointTheory::sym_power_correlators(std::vector<Slot> base, const std::vector<RSeries>& t, int n) {
  // sum over multisets {k_1 <= ... <= k_n}: prod t_k^{m_k}/m_k! <base, (L-1)^{k_1}, ...>
  RSeries out(policy_);
  std::vector<int> ks;
  std::function<void(int, int, const RSeries&)> rec = [&](int left, int kmin, const RSeries& coef) {
    if (coef.is_zero()) return;
    if (left == 0) {
      std::vector<Slot> slots = base;
      for (int k : ks) slots.push_back(Slot::pow_lm1(k));
      out += coef * correlator(slots);
      return;
    }
    for (int k = kmin; k < static_cast<int>(t.size()); ++k) {
      if (t[k].is_zero()) continue;
      RSeries c = coef;
      for (int m = 1; m <= left; ++m) {
        c = c * t[k] * frac(1, m);
        for (int i = 0; i < m; ++i) ks.push_back(k);
        rec(left - m, k + 1, c);
        ks.resize(ks.size() - static_cast<size_t>(m));
        if (c.is_zero()) break;
      }
    }
  };
  rec(n, 0, RSeries::one(policy_));
  return out;
}

RSeries PointTheory::topological_w(const std::vector<RSeries>& t) {
  check_t(t, policy_);
  RSeries w(policy_);
  for (int n = 0; n <= policy_.max_t_degree; ++n) w += sym_power_correlators({Slot::one(), Slot::one()}, t, n);
  return drop_nu1(w);
}

RSeries PointTheory::potential_f(const std::vector<RSeries>& t) {
  check_t(t, policy_);
  RSeries f = psi2_nu2_with_unit(ring_, policy_) * frac(1, 2);
  for (int n = 0; n <= policy_.max_t_degree; ++n) f += sym_power_correlators({}, t, n);
  return drop_nu1(f);
}

RSeries PointTheory::j_at_zero_substituted(const RSeries& v) {
  PointTheory& L = lifted(policy_.max_t_degree);
  const RSeries j0 = eval_q(L.j_function(), 0);
  if (policy_.max_nu_index < 1) return j0.with_policy(policy_);
  return substitute(j0, {{VarId::nu(1), v}}, policy_);
}

RSeries PointTheory::hierarchy_residue(int n) {
  if (n < 0) throw InvalidArgument("flow index must be non-negative");
  for (const auto& [m, f] : s_matrix().terms())
    if (!f.regular_at_zero()) throw DomainError("S(nu, q) has a pole at q = 0; the residue there cannot be dropped");
  const QSeries integrand = s_matrix() * (QRat::q() - 1).pow(n - 1);
  return -residue_at_infinity(integrand);
}

RSeries PointTheory::hierarchy_rhs(int n, const RSeries& v) {
  if (!(v.policy() == policy_)) throw PolicyMismatch("hierarchy_rhs: v must use the theory's policy");
  if (!kfock::is_zero(v.constant_term())) throw DomainError("hierarchy_rhs: v must have zero constant term");
  PointTheory& L = lifted(policy_.max_t_degree);
  const RSeries res = L.hierarchy_residue(n);
  const RSeries at_v = policy_.max_nu_index >= 1 ? substitute(res, {{VarId::nu(1), v}}, policy_) : res.with_policy(policy_);
  return v.derive(VarId::t(0)) * at_v;
}

// ---------------------------------------------------------------- identity checks

namespace {

struct Checker {
  CheckReport report;
  void eq(const std::string& name, const RSeries& a, const RSeries& b) { report.add(name, a == b, mismatch(a, b)); }
};

RSeries nu1(const TruncationPolicy& p) { return RSeries::variable(VarId::nu(1), p); }
RSeries nu2(const TruncationPolicy& p) {
  return p.max_nu_index >= 2 ? RSeries::variable(VarId::nu(2), p) : RSeries(p);
}

// <(L-1)^a>_{0,1} and <(L-1)^a, (L-1)^b>_{0,2} via J and S
RSeries one_point_lm1(PointTheory& th, int k) {
  RSeries out(th.policy());
  for (int j = 0; j <= k; ++j) {
    Rational c(binomial(static_cast<unsigned long>(k), static_cast<unsigned long>(j)));
    if ((k - j) % 2) c = -c;
    out += th.one_point_from_j(j) * c;
  }
  return out;
}

RSeries two_point_lm1(PointTheory& th, int a, int b) {
  RSeries out(th.policy());
  for (int i = 0; i <= a; ++i) {
    for (int j = 0; j <= b; ++j) {
      Rational c(binomial(static_cast<unsigned long>(a), static_cast<unsigned long>(i)) *
                 binomial(static_cast<unsigned long>(b), static_cast<unsigned long>(j)));
      if ((a - i + b - j) % 2) c = -c;
      out += th.two_point_poly_from_s(i, j) * c;
    }
  }
  return out;
}

std::string qlist(const std::vector<Rational>& qs) {
  std::string s;
  for (const auto& q : qs) s += (s.empty() ? "" : ",") + to_string(q);
  return "(" + s + ")";
}

void check_string(PointTheory& th, Checker& ck) {
  const auto& p = th.policy();
  const auto samples = default_q_samples(p.max_nu_index);
  // appending q = 0 multiplies the family by K = 1 + sum q/(1-q)
  for (size_t n = 1; n <= std::min<size_t>(4, samples.size()); ++n) {
    std::vector<Rational> qs(samples.begin(), samples.begin() + static_cast<long>(n));
    Rational K = 1;
    for (const auto& q : qs) K += q / (1 - q);
    auto padded = qs;
    padded.push_back(0);
    ck.eq("string family n=" + std::to_string(n) + " " + qlist(qs), th.corr_two_ones(padded), th.corr_two_ones(qs) * K);
  }
  // Q_2: <g1,g2,1,1> = K (K <g1,g2> + 1/((1-q1)(1-q2))) with <g1,g2> from S
  for (size_t i = 0; i < samples.size(); ++i) {
    for (size_t j = i; j < samples.size(); ++j) {
      const Rational &a = samples[i], &b = samples[j];
      const Rational K = 1 + a / (1 - a) + b / (1 - b);
      RSeries rhs = (th.two_point_from_s(a, b) * K + RSeries::constant(1 / ((1 - a) * (1 - b)), p)) * K;
      ck.eq("string Q_2 " + qlist({a, b}), th.corr_two_ones({a, b}), rhs);
    }
  }
  // Q_1: <g,1>_{0,2} (from S) = <g>_{0,1}/(1-q) (from J) + nu_1/(1-q)
  for (const auto& g : samples) {
    RSeries one_pt = eval_q(th.j_function(), g) - RSeries::one(p) + RSeries::constant(g, p) - nu1(p);
    ck.eq("string Q_1 q=" + to_string(g), th.two_point_from_s(g, 0), (one_pt + nu1(p)) * (1 / (1 - g)));
  }
  // Q_0: <1>_{0,1} (from J) = <>_{0,0} + 1/2 nu_1^2 + 1/2 nu_2
  {
    RSeries lhs = eval_q(th.j_function(), 0) - RSeries::one(p) - nu1(p);
    RSeries rhs = th.zero_point() + (nu1(p) * nu1(p) + nu2(p)) * frac(1, 2);
    ck.eq("string Q_0", lhs, rhs);
  }
  // descendant inputs: <X,1> = <X> + sum of difference quotients, all closed-form
  for (int a = 0; a <= 2; ++a) {
    for (int b = a; b <= 2; ++b) {
      std::vector<Slot> X{Slot::pow_l(a), Slot::pow_l(b), Slot::one(), Slot::one()};
      auto up = X;
      up.push_back(Slot::one());
      RSeries rhs = th.correlator(X);
      for (int pp = 0; pp < a; ++pp) rhs += th.correlator({Slot::pow_l(pp), Slot::pow_l(b), Slot::one(), Slot::one()});
      for (int pp = 0; pp < b; ++pp) rhs += th.correlator({Slot::pow_l(a), Slot::pow_l(pp), Slot::one(), Slot::one()});
      ck.eq("string L^" + std::to_string(a) + ",L^" + std::to_string(b), th.correlator(up), rhs);
    }
  }
  for (int k = 1; k <= std::min(3, p.max_t_index + 1); ++k) {
    const Rational g = samples.front();
    std::vector<Slot> X{Slot::pow_lm1(k), Slot::geom(g), Slot::one(), Slot::one()};
    auto up = X;
    up.push_back(Slot::one());
    RSeries rhs = th.correlator(X) * (1 + g / (1 - g)) +
                  th.correlator({Slot::pow_lm1(k - 1), Slot::geom(g), Slot::one(), Slot::one()});
    ck.eq("string (L-1)^" + std::to_string(k) + " with q=" + to_string(g), th.correlator(up), rhs);
  }
}

void check_dilaton(PointTheory& th, Checker& ck) {
  const auto& p = th.policy();
  const auto samples = default_q_samples(p.max_nu_index);
  const RSeries one = RSeries::one(p);
  // n = 0: <L-1>_{0,1} = (nu_1 d_1 - 2) <>_{0,0} - nu_2
  {
    RSeries Z = th.zero_point();
    ck.eq("dilaton n=0", th.one_point_from_j(1) - th.one_point_from_j(0), euler_nu1(Z) - Z * Rational(2) - nu2(p));
  }
  // n = 1 from S (two-point) against J (one-point)
  for (const auto& g : samples) {
    RSeries lhs = th.two_point_mixed_from_s(g, 1) - th.two_point_mixed_from_s(g, 0);
    RSeries one_pt = eval_q(th.j_function(), g) - one + RSeries::constant(g, p) - nu1(p);
    ck.eq("dilaton n=1 q=" + to_string(g), lhs, euler_nu1(one_pt) - one_pt);
  }
  for (int a = 0; a <= 3; ++a) {
    RSeries lhs = th.two_point_poly_from_s(a, 1) - th.two_point_poly_from_s(a, 0);
    RSeries one_pt = th.one_point_from_j(a);
    ck.eq("dilaton n=1 L^" + std::to_string(a), lhs, euler_nu1(one_pt) - one_pt);
  }
  // n = 2: correlator engine against S
  for (size_t i = 0; i + 1 < samples.size(); ++i) {
    const Rational &a = samples[i], &b = samples[i + 1];
    RSeries lhs = th.correlator({Slot::geom(a), Slot::geom(b), Slot::pow_lm1(1)});
    ck.eq("dilaton n=2 " + qlist({a, b}), lhs, euler_nu1(th.two_point_from_s(a, b)));
  }
  // n = 3, 4: closed form on both sides
  for (const auto& g : samples) {
    RSeries base = th.correlator({Slot::geom(g), Slot::one(), Slot::one()});
    RSeries lhs = th.correlator({Slot::geom(g), Slot::one(), Slot::one(), Slot::pow_lm1(1)});
    ck.eq("dilaton n=3 q=" + to_string(g), lhs, base + euler_nu1(base));
  }
  for (size_t i = 0; i + 1 < samples.size(); ++i) {
    const Rational &a = samples[i], &b = samples[i + 1];
    RSeries base = th.corr_two_ones({a, b});
    RSeries lhs = th.correlator({Slot::geom(a), Slot::geom(b), Slot::one(), Slot::one(), Slot::pow_lm1(1)});
    ck.eq("dilaton n=4 " + qlist({a, b}), lhs, base * Rational(2) + euler_nu1(base));
  }
  for (int a = 1; a <= 3; ++a) {
    RSeries base = th.corr_poly_insertions({a});
    RSeries lhs = th.correlator({Slot::pow_l(a), Slot::one(), Slot::one(), Slot::pow_lm1(1)});
    ck.eq("dilaton n=3 L^" + std::to_string(a), lhs, base + euler_nu1(base));
  }
}

void check_smatrix_a(PointTheory& th, Checker& ck) {
  const auto& p = th.policy();
  std::vector<std::pair<Rational, Rational>> pairs{{frac(1, 2), frac(1, 3)}, {frac(1, 2), frac(2, 5)}};
  for (const auto& [a, b] : pairs) {
    try {
      guard_q(a, p.max_nu_index);
      guard_q(b, p.max_nu_index);
    } catch (const DomainError&) {
      continue;
    }
    ck.eq("S two-point " + qlist({a, b}), th.two_point_from_s(a, b), th.corr_strip_ones({a, b}, 0));
    ck.eq("S two-point q2=0 " + qlist({a}), th.two_point_from_s(a, 0), th.corr_strip_ones({a}, 1));
  }
  for (int a = 0; a <= 2; ++a)
    for (int b = a; b <= 2; ++b)
      ck.eq("S two-point L^" + std::to_string(a) + ",L^" + std::to_string(b), th.two_point_poly_from_s(a, b),
            th.correlator({Slot::pow_l(a), Slot::pow_l(b)}));
}

void check_smatrix_b(PointTheory& th, Checker& ck) {
  const QSeries& S = th.s_matrix();
  QSeries s_inv_q = S.map_coeffs([](const QRat& f) { return f.at_reciprocal(); });
  QSeries lhs = to_qseries(th.metric_g()) * s_inv_q * S;
  QSeries one = QSeries::one(th.policy());
  ck.report.add("G S(1/q) S(q) = 1", lhs == one, lhs == one ? "" : std::to_string((lhs - one).size()) + " terms differ");
}

void check_smatrix_c(PointTheory& th, Checker& ck) {
  const auto& p = th.policy();
  const QSeries& S = th.s_matrix();
  // d_1 lowers the weight, so derivative identities hold up to weight D - 1
  TruncationPolicy low = p;
  low.max_weight = std::max(0, p.max_weight - 1);
  if (p.max_nu_index >= 1) {
    QSeries lhs = (S.derive(VarId::nu(1)) * (QRat::q() - 1)).with_policy(low), rhs = S.with_policy(low);
    ck.report.add("(q-1) d_1 S = S", lhs == rhs, lhs == rhs ? "" : std::to_string((lhs - rhs).size()) + " terms differ");
  }
  QSeries js = th.j_function() * S;
  QSeries expect = QSeries::constant(1 - QRat::q(), p);
  ck.report.add("J = (1-q) S^{-1} 1", js == expect, js == expect ? "" : std::to_string((js - expect).size()) + " terms differ");
  if (p.max_nu_index >= 1)
    ck.eq("d_1 J(nu,0) = G", eval_q(th.j_function(), 0).derive(VarId::nu(1)).with_policy(low), th.metric_g().with_policy(low));
  ck.eq("J(0,q) = 1-q", eval_q(th.j_function(), frac(1, 3)).filter([](const Monomial& m) { return m.is_one(); }),
        RSeries::constant(frac(2, 3), p));
}

void check_quantum(PointTheory& th, Checker& ck) {
  ck.eq("<1,1,1>/G = 1", th.quantum_product_constant(), RSeries::one(th.policy()));
  ck.eq("<1,1,1> = exp(sum nu_r/r)", th.correlator({Slot::one(), Slot::one(), Slot::one()}), th.e0());
}

void check_wdvv(PointTheory& th, Checker& ck) {
  const auto& p = th.policy();
  auto s = default_q_samples(p.max_nu_index);
  RSeries x(p);
  if (p.max_nu_index >= 1) x -= nu1(p);
  for (int k = 2; k <= p.max_nu_index; ++k) x -= RSeries::variable(VarId::nu(k), p) * frac(1, k);
  const RSeries g_inv = exp_series(x);
  auto three = [&](const Rational& a, const Rational& b) {
    return th.correlator({Slot::geom(a), Slot::geom(b), Slot::one()});
  };
  std::vector<std::vector<Rational>> quads;
  if (s.size() >= 4) quads.push_back({s[0], s[1], s[2], s[3]});
  if (s.size() >= 3) {
    quads.push_back({s[0], s[0], s[1], s[2]});
    quads.push_back({s[1], s[2], s[2], s[0]});
  }
  for (const auto& q : quads) {
    RSeries v1234 = g_inv * three(q[0], q[1]) * three(q[2], q[3]);
    RSeries v1324 = g_inv * three(q[0], q[2]) * three(q[1], q[3]);
    RSeries v1423 = g_inv * three(q[0], q[3]) * three(q[1], q[2]);
    ck.eq("WDVV (12)(34)=(13)(24) " + qlist(q), v1234, v1324);
    ck.eq("WDVV (12)(34)=(14)(23) " + qlist(q), v1234, v1423);
  }
}

void check_unstable_qf(PointTheory& th, Checker& ck) {
  // <> + 1/2 nu_2 + <t>_{0,1} + 1/2 <t,t>_{0,2} = 1/2 <t+1-L+nu_1, t+1-L+nu_1>_{0,2}
  const auto& p = th.policy();
  const auto t = th.standard_t();
  const int K = static_cast<int>(t.size());
  std::vector<RSeries> x = t;  // coefficients of t + 1 - L + nu_1 in the (L-1)^k basis
  x[0] += nu1(p);
  if (K > 1) x[1] -= RSeries::one(p);
  else x.push_back(-RSeries::one(p));
  RSeries lhs = th.zero_point() + nu2(p) * frac(1, 2);
  RSeries tt(p), xx(p);
  for (int a = 0; a < K; ++a) lhs += t[a] * one_point_lm1(th, a);
  for (int a = 0; a < static_cast<int>(x.size()); ++a) {
    for (int b = 0; b < static_cast<int>(x.size()); ++b) {
      const RSeries tp = two_point_lm1(th, a, b);
      if (a < K && b < K) tt += t[a] * t[b] * tp;
      xx += x[a] * x[b] * tp;
    }
  }
  lhs += tt * frac(1, 2);
  ck.eq("unstable quadratic form, general t", lhs, xx * frac(1, 2));
  // linear part alone: <t>_{0,1} = <t, 1-L+nu_1>_{0,2}
  for (int a = 0; a < K; ++a) {
    const RSeries rhs = two_point_lm1(th, a, 0) * nu1(p) - two_point_lm1(th, a, 1);
    ck.eq("unstable linear part (L-1)^" + std::to_string(a), one_point_lm1(th, a), rhs);
  }
}

void check_reconstr(PointTheory& th, Checker& ck) {
  const TruncationPolicy base = th.policy();
  TruncationPolicy ext = base;
  ext.max_t_degree += 2;
  PointTheory P(ext);
  const auto t = P.standard_t();
  const int K = static_cast<int>(t.size());
  const RSeries F = P.potential_f(t);
  const RSeries tau = P.tau_fixed_point(t);
  PointTheory& L = P.lifted(ext.max_t_degree);
  const int kmax = std::max(K, 2);
  // B(a,b) = <(L-1)^a, (L-1)^b>_{0,2} at nu_1 = tau
  std::vector<std::vector<RSeries>> B(kmax, std::vector<RSeries>(kmax, RSeries(ext)));
  for (int a = 0; a < kmax; ++a)
    for (int b = a; b < kmax; ++b) {
      RSeries v = L.correlator({Slot::pow_lm1(a), Slot::pow_lm1(b)});
      B[a][b] = B[b][a] = substitute(v, {{VarId::nu(1), tau}}, ext);
    }
  std::vector<RSeries> x(kmax, RSeries(ext));  // t + 1 - L
  for (int k = 0; k < K; ++k) x[k] += t[k];
  x[1] -= RSeries::one(ext);
  RSeries rhs(ext);
  for (int a = 0; a < kmax; ++a)
    for (int b = 0; b < kmax; ++b) rhs += x[a] * x[b] * B[a][b];
  rhs *= frac(1, 2);
  ck.eq("potential F = 1/2 <t+1-L, t+1-L>(tau)", F.with_policy(base), rhs.with_policy(base));
  for (int m = 0; m < K; ++m) {
    RSeries d(ext);
    for (int b = 0; b < kmax; ++b) d += B[m][b] * x[b];
    const RSeries lhs = F.derive(VarId::t(m)).with_policy(base);
    const bool half = lhs == (d * frac(1, 2)).with_policy(base);
    ck.report.add("d_" + std::to_string(m) + " F = <(L-1)^m, t+1-L>(tau)", lhs == d.with_policy(base),
                  std::string("variant with factor 1/2 ") + (half ? "also holds" : "fails"));
    for (int n = m; n < K; ++n) {
      const RSeries lhs2 = F.derive(VarId::t(m)).derive(VarId::t(n)).with_policy(base);
      const bool half2 = lhs2 == (B[m][n] * frac(1, 2)).with_policy(base);
      ck.report.add("d_" + std::to_string(m) + " d_" + std::to_string(n) + " F = <(L-1)^m, (L-1)^n>(tau)",
                    lhs2 == B[m][n].with_policy(base),
                    std::string("variant with factor 1/2 ") + (half2 ? "also holds" : "fails"));
    }
  }
}

}  // namespace

CheckReport check_identity(PointTheory& theory, Identity which) {
  Checker ck;
  switch (which) {
    case Identity::String:
      check_string(theory, ck);
      break;
    case Identity::Dilaton:
      check_dilaton(theory, ck);
      break;
    case Identity::Wdvv:
      check_wdvv(theory, ck);
      break;
    case Identity::SMatrixA:
      check_smatrix_a(theory, ck);
      break;
    case Identity::SMatrixB:
      check_smatrix_b(theory, ck);
      break;
    case Identity::SMatrixC:
      check_smatrix_c(theory, ck);
      break;
    case Identity::UnstableQf:
      check_unstable_qf(theory, ck);
      break;
    case Identity::Reconstr:
      check_reconstr(theory, ck);
      break;
    case Identity::Quantum:
      check_quantum(theory, ck);
      break;
  }
  return ck.report;
}

CheckReport check_hierarchy(const TruncationPolicy& policy, int flows) {
  if (flows < 0 || flows > policy.max_t_index) throw InvalidArgument("flows must lie in [0, K_t]");
  Checker ck;
  TruncationPolicy ext = policy;
  ext.max_t_degree += 2;
  PointTheory P2(ext);
  const RSeries tau = P2.tau_fixed_point();
  std::vector<RSeries> rhs;
  for (int n = 0; n <= flows; ++n) {
    rhs.push_back(P2.hierarchy_rhs(n, tau));
    ck.eq("flow n=" + std::to_string(n), tau.derive(VarId::t(n)).with_policy(policy), rhs.back().with_policy(policy));
  }
  for (int m = 0; m <= flows; ++m)
    for (int n = m + 1; n <= flows; ++n) {
      ck.eq("compatibility d_" + std::to_string(m) + " rhs_" + std::to_string(n),
            rhs[n].derive(VarId::t(m)).with_policy(policy), rhs[m].derive(VarId::t(n)).with_policy(policy));
      ck.eq("mixed partials of v (" + std::to_string(m) + "," + std::to_string(n) + ")",
            tau.derive(VarId::t(m)).derive(VarId::t(n)).with_policy(policy),
            tau.derive(VarId::t(n)).derive(VarId::t(m)).with_policy(policy));
    }

  PointTheory P(policy);
  const RSeries v = P.tau_fixed_point();
  const RSeries w = P.topological_w(P.standard_t());
  ck.eq("J(v,0) = 1 + w", P.j_at_zero_substituted(v), RSeries::one(policy) + w);
  auto only_t0 = [](const Monomial& m) {
    for (const auto& [var, e] : m.factors())
      if (var.is_t() && var.index != 0) return false;
    return true;
  };
  ck.eq("v(t_0,0,...) = t_0", v.filter(only_t0), RSeries::variable(VarId::t(0), policy));
  RSeries x = RSeries::variable(VarId::t(0), policy);
  for (int k = 2; k <= policy.max_nu_index; ++k) x += RSeries::variable(VarId::nu(k), policy) * frac(1, k);
  ck.eq("w(t_0,0,...) = exp(t_0 + sum nu_k/k) - 1", w.filter(only_t0), exp_series(x) - RSeries::one(policy));

  PointTheory& L = P.lifted(policy.max_t_degree);
  const auto tl = L.standard_t();
  ck.eq("[S t]_+(nu,1): correlator route = projection route", L.s_dress_at_one(tl), L.s_dress_at_one_projection(tl));
  for (int n = 0; n <= flows; ++n) {
    // -Res_inf (q-1)^{n-1} S dq = [u^n] (1-u)^{n-1} e(u)
    RSeries alt(L.policy());
    if (n == 0) {
      alt = L.e_taylor(0);
    } else {
      for (int i = 0; i <= n; ++i) {
        Rational c(binomial(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(n - i)));
        if ((n - i) % 2) c = -c;
        alt += L.e_taylor(i) * c;
      }
    }
    ck.eq("flow residue n=" + std::to_string(n) + " via expansion at infinity", L.hierarchy_residue(n), alt);
  }
  return ck.report;
}

}  // namespace kfock
