#include "kfock/fock.hpp"

#include <functional>

#include "kfock/errors.hpp"

namespace kfock {

namespace {

RationalMatrix identity(int n) {
  RationalMatrix m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const size_t n = a.size();
  RationalMatrix c(n, std::vector<Rational>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Gauss-Jordan over Q; throws DomainError when singular.
RationalMatrix invert(RationalMatrix a) {
  const int n = static_cast<int>(a.size());
  RationalMatrix inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && kfock::is_zero(a[piv][col])) ++piv;
    if (piv == n) throw DomainError("pairing matrix is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational s = 1 / a[col][col];
    for (int j = 0; j < n; ++j) {
      a[col][j] *= s;
      inv[col][j] *= s;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || kfock::is_zero(a[i][col])) continue;
      const Rational f = a[i][col];
      for (int j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

KRingData KRingData::point() { return KRingData{}; }

KRingData KRingData::synthetic_rank2() {
  KRingData r;
  r.rank = 2;
  r.pairing = {{1, 1}, {1, 2}};
  return r;
}

void KRingData::validate() const {
  if (rank < 1) throw InvalidArgument("K-ring rank must be positive");
  if (static_cast<int>(pairing.size()) != rank) throw InvalidArgument("pairing must be rank x rank");
  for (const auto& row : pairing)
    if (static_cast<int>(row.size()) != rank) throw InvalidArgument("pairing must be rank x rank");
  if (unit_index < 1 || unit_index > rank) throw InvalidArgument("unit index out of range");
  try {
    inverse_pairing();
  } catch (const DomainError&) {
    throw InvalidArgument("pairing is not invertible over Q");
  }
  for (const auto& [m, mat] : adams) {
    if (m < 1) throw InvalidArgument("Adams operations are indexed by m >= 1");
    if (static_cast<int>(mat.size()) != rank) throw InvalidArgument("Adams matrix must be rank x rank");
    for (const auto& row : mat)
      if (static_cast<int>(row.size()) != rank) throw InvalidArgument("Adams matrix must be rank x rank");
  }
  if (adams_matrix(1) != identity(rank)) throw InvalidArgument("psi^1 must be the identity");
  for (const auto& [m, a] : adams)
    for (const auto& [l, b] : adams)
      if (adams.count(m * l) && multiply(a, b) != adams.at(m * l))
        throw InvalidArgument("Adams operations violate psi^m psi^l = psi^{ml} at m=" + std::to_string(m) +
                              ", l=" + std::to_string(l));
}

RationalMatrix KRingData::inverse_pairing() const {
  RationalMatrix p(rank, std::vector<Rational>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) p[i][j] = pairing[i][j];
  return invert(std::move(p));
}

RationalMatrix KRingData::adams_matrix(int m) const {
  auto it = adams.find(m);
  return it == adams.end() ? identity(rank) : it->second;
}

Rational KRingData::chi_with_dual(const std::vector<Rational>& w, int alpha) const {
  if (static_cast<int>(w.size()) != rank) throw InvalidArgument("coordinate vector has the wrong length");
  if (alpha < 1 || alpha > rank) throw InvalidArgument("color out of range");
  // Phi^alpha = sum_g inv[g][alpha] Phi_g, so chi(W Phi^alpha) = sum_{b,g} c^b P[b][g] inv[g][alpha]
  const RationalMatrix inv = inverse_pairing();
  Rational s;
  for (int b = 0; b < rank; ++b)
    for (int g = 0; g < rank; ++g) s += w[b] * pairing[b][g] * inv[g][alpha - 1];
  return s;
}

FockElement create(const FockElement& e, int r, int alpha) {
  if (alpha < 1 || alpha > e.ring.rank) throw InvalidArgument("color out of range");
  return {e.series * RSeries::variable(VarId::nu(r, alpha), e.series.policy()), e.ring};
}

FockElement annihilate(const FockElement& e, int m, const std::vector<Rational>& w) {
  if (static_cast<int>(w.size()) != e.ring.rank) throw InvalidArgument("coordinate vector has the wrong length");
  if (m < 1 || m > e.series.policy().max_nu_index) throw InvalidArgument("annihilation index out of range");
  RSeries out(e.series.policy());
  for (int b = 0; b < e.ring.rank; ++b)
    if (!kfock::is_zero(w[b])) out += e.series.derive(VarId::nu(m, b + 1)) * (w[b] * m);
  return {std::move(out), e.ring};
}

std::vector<Monomial> spanning_monomials(int rank, int max_nu_index, int max_weight) {
  std::vector<VarId> vars;
  for (int r = 1; r <= max_nu_index; ++r)
    for (int a = 1; a <= rank; ++a) vars.push_back(VarId::nu(r, a));
  std::vector<Monomial> out;
  std::vector<Monomial::Factor> cur;
  std::function<void(size_t, int)> rec = [&](size_t i, int left) {
    if (i == vars.size()) {
      out.push_back(Monomial::from_factors(cur));
      return;
    }
    const int w = vars[i].weight();
    for (int e = 0; e * w <= left; ++e) {
      if (e > 0) cur.emplace_back(vars[i], e);
      rec(i + 1, left - e * w);
      if (e > 0) cur.pop_back();
    }
  };
  rec(0, max_weight);
  return out;
}

bool commutator_check(const KRingData& ring, int m, int l, int alpha, int beta, const TruncationPolicy& policy) {
  if (m < 1 || l < 1 || m > policy.max_nu_index || l > policy.max_nu_index)
    throw InvalidArgument("commutator_check: index out of range");
  if (alpha < 1 || beta < 1 || alpha > ring.rank || beta > ring.rank)
    throw InvalidArgument("commutator_check: color out of range");
  std::vector<Rational> w(ring.rank);
  w[beta - 1] = 1;
  const Rational scalar = m == l ? Rational(m) * ring.chi_with_dual(w, alpha) : Rational(0);
  for (const Monomial& mono : spanning_monomials(ring.rank, policy.max_nu_index, policy.max_weight - l)) {
    FockElement e{RSeries::term(mono, 1, policy), ring};
    const RSeries lhs = annihilate(create(e, l, alpha), m, w).series - create(annihilate(e, m, w), l, alpha).series;
    if (!(lhs == e.series * scalar)) return false;
  }
  return true;
}

FockElement point_embed(const ClassFunction& f, const TruncationPolicy& policy, const KRingData& ring) {
  if (ring.rank != 1) throw InvalidArgument("point_embed needs a rank-1 ring");
  return {frobenius_ch(f, policy), ring};
}

RSeries pairing_nu1_nu1(const KRingData& ring, const TruncationPolicy& policy) {
  RSeries s(policy);
  for (int a = 1; a <= ring.rank; ++a)
    for (int b = 1; b <= ring.rank; ++b)
      s += RSeries::variable(VarId::nu(1, a), policy) * RSeries::variable(VarId::nu(1, b), policy) *
           Rational(ring.pairing[a - 1][b - 1]);
  return s;
}

RSeries psi2_nu2_with_unit(const KRingData& ring, const TruncationPolicy& policy) {
  const RationalMatrix psi2 = ring.adams_matrix(2);
  RSeries s(policy);
  for (int a = 1; a <= ring.rank; ++a) {
    Rational c;
    for (int b = 1; b <= ring.rank; ++b) c += psi2[b - 1][a - 1] * ring.pairing[b - 1][ring.unit_index - 1];
    if (policy.max_nu_index >= 2) s += RSeries::variable(VarId::nu(2, a), policy) * c;
  }
  return s;
}

}  // namespace kfock
