#pragma once

#include <string>
#include <vector>

#include "kfock/gw_point.hpp"
#include "kfock/symgroup.hpp"

namespace kfock {

/// A permutation of {1..n}: images[i-1] = sigma(i).
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n);
  /// The standard permutation of the given cycle type: cycles on consecutive blocks.
  static Permutation of_type(const Partition& lambda);
  int n() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images[i - 1]; }
  Permutation inverse() const;
  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  Partition cycle_type() const;
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

namespace oracle {

/// Degree-k monomials in n variables fixed by the standard permutation of the cycle type.
long monomials_fixed(int nvars, int degree, const Partition& cycle_type);

/// Character of Sym^k(V_n), V_n the reflection representation, from fixed-monomial counts.
ClassFunction sym_vn_classfn(int n, int k);

/// 1 - q + nu_1 + sum_{2 <= n <= nmax} sum_{k <= kmax} ch(Sym^k V_n) q^k with polynomial coefficients.
QSeries j_oracle(const TruncationPolicy& policy, int nmax, int kmax);

struct CosetCount {
  long count = 0;
  std::vector<long> sizes;                          // sorted
  std::vector<std::vector<std::vector<int>>> gammas;  // sorted, one per double coset
};

/// S_mu \ S_n / S_lambda by orbit enumeration over S_n, n <= 7.
CosetCount double_coset_brute(const Composition& lambda, const Composition& mu);

/// Tr_g Ind_{S_young}^{S_n}(f_1 x ... x f_r) as a sum over left coset representatives, n <= 7.
Rational induced_char_brute(const Composition& young, const std::vector<ClassFunction>& fs, const Permutation& g);

/// <1/(1-qL), 1, ..., 1>_{0,m} built from J by string steps.
RSeries string_chain(PointTheory& theory, const Rational& q, int total_points);

/// sum_{k >= kmin} h_k(nu).
RSeries trivial_rep_genfun(const TruncationPolicy& policy, int kmin);

/// The n-point correlator <1/(1-q_1 L), ..., 1/(1-q_n L), 1, 1> evaluated term by term from
/// prod (1-q_i)^{-1} (1 + sum 1/(q_i^{-1}-1))^{n-1} exp(sum_r nu_r/r (1 + sum 1/(q_i^{-r}-1))).
RSeries corr_formula(const TruncationPolicy& policy, const std::vector<Rational>& qs);

}  // namespace oracle

/// Correlator chain: q-permutation symmetry, the one-insertion identity in symbolic q,
/// padding by q = 0, string-chain agreement and the nu = 0 values of <L^a, L^b, 1, 1>.
CheckReport check_correlator_chain(PointTheory& theory);

/// Oracle-backed suites: "j-oracle", "cosets", "heisenberg", "sym-trace", "string-chain", "corr-chain".
/// max_n caps the symmetric-group sizes (clamped to each suite's hard limit).
CheckReport run_oracle_suite(const std::string& suite, int max_n, const TruncationPolicy& policy);

/// All suite names understood by run_oracle_suite.
const std::vector<std::string>& oracle_suite_names();

}  // namespace kfock
