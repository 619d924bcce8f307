#pragma once

#include <map>
#include <utility>
#include <vector>

#include "kfock/rational.hpp"
#include "kfock/series.hpp"

namespace kfock {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;
/// Non-negative parts in any order (zeros allowed).
using Composition = std::vector<int>;

/// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
const std::vector<Partition>& partitions_of(int n);
/// Position of lambda in partitions_of(|lambda|).
size_t partition_index(const Partition& lambda);
int partition_size(const Partition& lambda);
/// Throws InvalidArgument unless lambda is weakly decreasing and positive.
void check_partition(const Partition& lambda);

/// Order of the centralizer of a permutation of cycle type lambda.
Integer z_of(const Partition& lambda);

/// Multiset union, sorted decreasingly.
Partition partition_union(const Partition& a, const Partition& b);

/// chi^lambda(mu) by Murnaghan-Nakayama (memoized, thread-safe).
long irreducible_character(const Partition& lambda, const Partition& mu);

/// A class function on S_n, stored densely in partitions_of(n) order.
class ClassFunction {
 public:
  ClassFunction() : ClassFunction(0) {}
  explicit ClassFunction(int n);

  static ClassFunction trivial(int n);
  static ClassFunction sign(int n);
  static ClassFunction irreducible(const Partition& lambda);
  /// n on the n-cycle class, 0 elsewhere.
  static ClassFunction p_n(int n);

  int n() const { return n_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& at(const Partition& mu) const;
  void set(const Partition& mu, const Rational& value);

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  ClassFunction& operator*=(const Rational& s);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const Rational& s) { return a *= s; }
  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.n_ == b.n_ && a.values_ == b.values_;
  }

 private:
  void check_same(const ClassFunction& o) const;
  int n_;
  std::vector<Rational> values_;
};

/// Sum over classes of f(lambda) g(lambda) / z_lambda.
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

/// Character of Ind_{S_a x S_b}^{S_{a+b}} (f x g).
ClassFunction induce_product(const ClassFunction& f, const ClassFunction& g);

/// Restriction to S_a x S_b: value at (alpha, beta) is f(alpha u beta).
std::map<std::pair<Partition, Partition>, Rational> restrict(const ClassFunction& f, int a, int b);

/// g(mu) = f((r) u mu), a class function on S_{n-r}.
ClassFunction cyclic_trace(const ClassFunction& f, int r);

/// Frobenius characteristic sum_lambda f(lambda)/z_lambda * nu_lambda.
RSeries frobenius_ch(const ClassFunction& f, const TruncationPolicy& policy);

/// Character of Sym^k(C^n) under permutation of coordinates.
ClassFunction sym_power_char(int n, int k);

/// Contingency table with row sums lambda and column sums mu, and the size
/// lambda! mu! / gamma! of the double coset it labels.
struct GammaCoset {
  std::vector<std::vector<int>> gamma;
  Integer size;
};

/// Double cosets S_mu \ S_n / S_lambda as matrices gamma with
/// sum_j gamma_ij = lambda_i and sum_i gamma_ij = mu_j.
std::vector<GammaCoset> double_cosets(const Composition& lambda, const Composition& mu);

/// lambda! = prod lambda_i!.
Integer composition_factorial(const Composition& c);

}  // namespace kfock
