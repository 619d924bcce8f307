#pragma once

#include <random>

#include "kfock/series.hpp"

namespace kft {

using namespace kfock;

inline VarId nu(int r, int c = 1) { return VarId::nu(r, c); }
inline VarId t(int k) { return VarId::t(k); }

inline RSeries var(VarId v, const TruncationPolicy& p) { return RSeries::variable(v, p); }
inline RSeries cst(const Rational& c, const TruncationPolicy& p) { return RSeries::constant(c, p); }

inline TruncationPolicy policy(int R, int D, int K = 4, int T = 3) { return TruncationPolicy{R, D, K, T}; }

/// Random series with small integer-ratio coefficients, zero constant term optional.
inline RSeries random_series(std::mt19937& rng, const TruncationPolicy& p, int terms, bool constant = true) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4), exp(0, 2), pick_r(1, p.max_nu_index),
      pick_k(0, p.max_t_index);
  RSeries s(p);
  for (int i = 0; i < terms; ++i) {
    std::vector<Monomial::Factor> f;
    f.emplace_back(VarId::nu(pick_r(rng)), exp(rng));
    f.emplace_back(VarId::nu(pick_r(rng)), exp(rng));
    f.emplace_back(VarId::t(pick_k(rng)), exp(rng) / 2);
    Monomial m = Monomial::from_factors(std::move(f));
    if (!constant && m.is_one()) continue;
    s.add_term(m, frac(num(rng), den(rng)));
  }
  return s;
}

}  // namespace kft
