#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "kfock/fock.hpp"
#include "kfock/series.hpp"

namespace kfock {

/// A basis insertion: 1, 1/(1 - q L), L^j or (L - 1)^k.
struct Slot {
  enum class Kind { One = 0, Geom = 1, PowL = 2, PowLm1 = 3 };
  Kind kind = Kind::One;
  Rational q;  // Geom
  int j = 0;   // PowL / PowLm1 exponent

  static Slot one() { return {}; }
  static Slot geom(const Rational& q0);
  static Slot pow_l(int j);
  static Slot pow_lm1(int k);

  /// Rewrites the trivial forms (q = 0, L^0, (L-1)^0) as One.
  Slot canonical() const;
  /// The value of the insertion at L = 1.
  Rational at_one() const;
  std::string str() const;

  friend bool operator<(const Slot& a, const Slot& b);
  friend bool operator==(const Slot& a, const Slot& b) {
    return a.kind == b.kind && a.q == b.q && a.j == b.j;
  }
};

/// A linear combination of basis slots with series coefficients.
struct Insertion {
  std::vector<std::pair<Slot, RSeries>> terms;

  Insertion& add(const Slot& s, const RSeries& c) {
    terms.emplace_back(s, c);
    return *this;
  }
};

/// Throws DomainError unless q0 != 1 and q0^r != 1 for 2 <= r <= R.
void guard_q(const Rational& q0, int max_nu_index);

/// Genus-0 permutation-equivariant theory of the point at a fixed truncation.
/// Correlator values are nu-series (no t-variables) in policy().
class PointTheory {
 public:
  explicit PointTheory(TruncationPolicy policy);
  PointTheory(const PointTheory&) = delete;
  PointTheory& operator=(const PointTheory&) = delete;

  const TruncationPolicy& policy() const { return policy_; }

  /// (1 - q) exp(sum nu_k / (k (1 - q^k))).
  const QSeries& j_function();
  /// exp(nu_1/(q-1) + sum_{k>=2} nu_k / (k (q^k - 1))).
  const QSeries& s_matrix();
  /// exp(nu_1 + sum_{k>=2} nu_k / k).
  const RSeries& metric_g();
  /// exp(sum nu_r / r), the closed form of <1,1,1>_{0,3}.
  const RSeries& e0();
  /// e(q0) = exp(sum nu_r q0^r / (r (1 - q0^r))).
  RSeries e_at(const Rational& q0);
  /// [q^i] e(q).
  const RSeries& e_taylor(int i);
  /// [x^i] e(x / (1 + x)).
  const RSeries& etilde_taylor(int i);

  /// <slots...>_{0,n}(nu) for any basis slots (One entries included).
  RSeries correlator(std::vector<Slot> slots);
  /// Multilinear extension over Insertion coefficients; the result lives in policy().
  RSeries correlator(const std::vector<Insertion>& inputs);

  /// <1/(1-qL), 1, 1>_{0,3} with q kept symbolic.
  QSeries corr_one_geom_symbolic();
  /// <1/(1-q_1 L), ..., 1/(1-q_n L), 1, 1>_{0,n+2}, n >= 1.
  RSeries corr_two_ones(const std::vector<Rational>& qs);
  /// <L^{j_1}, ..., L^{j_n}, 1, 1>_{0,n+2}.
  RSeries corr_poly_insertions(const std::vector<int>& exps);
  /// <1/(1-q_1 L), ..., 1/(1-q_n L), 1^{ones}>.
  RSeries corr_strip_ones(const std::vector<Rational>& qs, int ones);

  /// <1/(1-q1 L), 1/(1-q2 L)>_{0,2} solved from G S(1/q1) S(1/q2) = 1 + (1 - q1 q2) <...>.
  RSeries two_point_from_s(const Rational& q1, const Rational& q2);
  /// <L^a, L^b>_{0,2} from the q-expansion of S(nu, 1/x).
  RSeries two_point_poly_from_s(int a, int b);
  /// <1/(1-x L), L^b>_{0,2} from S.
  RSeries two_point_mixed_from_s(const Rational& x, int b);
  /// <L^j>_{0,1} = [q^j] (J - 1 + q - nu_1).
  RSeries one_point_from_j(int j);
  /// <>_{0,0} from the unstable quadratic-form identity with t = 0.
  RSeries zero_point();
  /// <1,1,1>_{0,3} / G.
  RSeries quantum_product_constant();

  /// The same theory with max_weight D + t_degree and max_t_degree t_degree.
  PointTheory& lifted(int t_degree);

  /// Coefficients c_k of t(L) = sum_k c_k (L-1)^k; default c_k = t_k.
  std::vector<RSeries> standard_t() const;

  /// [S t]_+(nu, 1) = G^{-1} <1, 1, t(L)>_{0,3}.
  RSeries s_dress_at_one(const std::vector<RSeries>& t);
  /// Independent route: [S t]_+ by elementary-fraction projection, evaluated at q = 1.
  RSeries s_dress_at_one_projection(const std::vector<RSeries>& t);
  /// Fixed point tau = [S t]_+(tau, nu_2, ..., 1); the result has no nu_1.
  RSeries tau_fixed_point(const std::vector<RSeries>& t);
  RSeries tau_fixed_point() { return tau_fixed_point(standard_t()); }
  /// w = sum_n 1/n! <1, 1, t, ..., t>_{0,2+n} at nu_1 = 0.
  RSeries topological_w(const std::vector<RSeries>& t);
  /// J(v, 0) = G with nu_1 -> v.
  RSeries j_at_zero_substituted(const RSeries& v);
  /// -Res_{q=inf} (q-1)^{n-1} S(nu, q) dq as a nu-series.
  RSeries hierarchy_residue(int n);
  /// d_{t_0} v * (-Res_{q=inf} (q-1)^{n-1} S(v, q) dq).
  RSeries hierarchy_rhs(int n, const RSeries& v);

  /// F(t) = 1/2 (psi^2(nu_2),1) + sum_n 1/n! <t,...,t>_{0,n}(0, nu_2, ...).
  RSeries potential_f(const std::vector<RSeries>& t);

  /// Sets nu_1 = 0.
  static RSeries drop_nu1(const RSeries& s);

 private:
  RSeries closed_form(const std::vector<Slot>& slots);
  RSeries string_recursion(const std::vector<Slot>& slots);
  RSeries q_correction(const std::vector<Slot>& slots);
  void extend_taylor(std::vector<RSeries>& cache, const std::vector<RSeries>& exponent, int upto);
  const std::vector<RSeries>& e_exponent(int upto, bool tilde);
  RSeries sym_power_correlators(std::vector<Slot> base, const std::vector<RSeries>& t, int n);

  TruncationPolicy policy_;
  KRingData ring_ = KRingData::point();
  std::recursive_mutex mutex_;
  std::unique_ptr<QSeries> j_, s_;
  std::unique_ptr<RSeries> g_, e0_;
  std::vector<RSeries> e_exp_, etilde_exp_, e_tay_, etilde_tay_;
  std::map<std::vector<Slot>, RSeries> memo_;
  std::map<int, std::unique_ptr<PointTheory>> lifted_;
};

/// One verification instance.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckResult> results;

  void add(std::string name, bool pass, std::string detail = {}) {
    results.push_back({std::move(name), pass, std::move(detail)});
  }
  void merge(const CheckReport& o) { results.insert(results.end(), o.results.begin(), o.results.end()); }
  bool pass() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
  size_t failures() const {
    size_t n = 0;
    for (const auto& r : results) n += r.pass ? 0 : 1;
    return n;
  }
};

enum class Identity { String, Dilaton, Wdvv, SMatrixA, SMatrixB, SMatrixC, UnstableQf, Reconstr, Quantum };

/// Default rational q-samples, filtered by the root-of-unity guard.
std::vector<Rational> default_q_samples(int max_nu_index);

/// Runs one identity family at the theory's truncation.
CheckReport check_identity(PointTheory& theory, Identity which);

/// Topological solution against the flows n <= flows at the policy's t-degree,
/// plus flow compatibility and the t_0-only reductions.
CheckReport check_hierarchy(const TruncationPolicy& policy, int flows);

}  // namespace kfock
