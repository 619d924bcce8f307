#pragma once

#include <map>
#include <vector>

#include "kfock/series.hpp"
#include "kfock/symgroup.hpp"

namespace kfock {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Finite-rank K-ring: basis Phi_1..Phi_N (1-based colors), Euler pairing
/// (Phi_a, Phi_b) and Adams operations psi^m(Phi_a) = sum_b adams[m][b][a] Phi_b.
struct KRingData {
  int rank = 1;
  std::vector<std::vector<long>> pairing{{1}};
  std::map<int, RationalMatrix> adams;
  int unit_index = 1;

  /// The point: rank 1, pairing (1), trivial Adams operations.
  static KRingData point();
  /// Rank 2 with pairing [[1,1],[1,2]] and identity Adams operations.
  static KRingData synthetic_rank2();

  /// Throws InvalidArgument unless the pairing is square and invertible and
  /// the Adams data satisfy psi^1 = id and psi^m psi^l = psi^{ml}.
  void validate() const;
  /// pairing^{-1} over Q.
  RationalMatrix inverse_pairing() const;
  /// psi^m, identity when not stored.
  RationalMatrix adams_matrix(int m) const;
  /// chi(W (x) Phi^alpha) for W given by coordinates c^beta in the Phi-basis,
  /// computed through the pairing and its inverse.
  Rational chi_with_dual(const std::vector<Rational>& w, int alpha) const;
};

/// A Fock element: a nu-series together with the ring whose colors it uses.
struct FockElement {
  RSeries series;
  KRingData ring;
};

/// nu_{r,alpha} * E.
FockElement create(const FockElement& e, int r, int alpha);

/// iota_{-m}(W) E = m sum_beta c^beta d/d nu_{m,beta} E.
FockElement annihilate(const FockElement& e, int m, const std::vector<Rational>& w);

/// Checks [iota_{-m}(Phi_beta), nu_{l,alpha}] = m delta_{ml} chi(Phi_beta (x) Phi^alpha)
/// on every monomial of weight <= D - l in the colors of the ring.
bool commutator_check(const KRingData& ring, int m, int l, int alpha, int beta, const TruncationPolicy& policy);

/// All nu-monomials of weight <= max_weight in colors 1..rank with index <= R.
std::vector<Monomial> spanning_monomials(int rank, int max_nu_index, int max_weight);

/// frobenius_ch(f) as an element of the point's Fock space.
FockElement point_embed(const ClassFunction& f, const TruncationPolicy& policy, const KRingData& ring = KRingData::point());

/// sum_{a,b} (Phi_a,Phi_b) nu_{1,a} nu_{1,b}.
RSeries pairing_nu1_nu1(const KRingData& ring, const TruncationPolicy& policy);
/// sum_a nu_{2,a} (psi^2(Phi_a), 1).
RSeries psi2_nu2_with_unit(const KRingData& ring, const TruncationPolicy& policy);

}  // namespace kfock
