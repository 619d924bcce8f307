#include "kfock/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "kfock/errors.hpp"
#include "kfock/fock.hpp"

namespace kfock {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(static_cast<size_t>(n));
  std::iota(p.images.begin(), p.images.end(), 1);
  return p;
}

Permutation Permutation::of_type(const Partition& lambda) {
  Permutation p;
  int start = 1;
  for (int part : lambda) {
    for (int i = 0; i < part; ++i) p.images.push_back(start + (i + 1) % part);
    start += part;
  }
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images.resize(images.size());
  for (int i = 1; i <= n(); ++i) p.images[(*this)(i) - 1] = i;
  return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) throw InvalidArgument("permutations of different degrees");
  Permutation p;
  for (int i = 1; i <= b.n(); ++i) p.images.push_back(a(b(i)));
  return p;
}

Partition Permutation::cycle_type() const {
  std::vector<bool> seen(images.size(), false);
  Partition out;
  for (int i = 1; i <= n(); ++i) {
    if (seen[i - 1]) continue;
    int len = 0;
    for (int j = i; !seen[j - 1]; j = (*this)(j)) {
      seen[j - 1] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

namespace oracle {

namespace {

// Local partition enumeration and centralizer orders, kept apart from symgroup.
void local_partitions(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    local_partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> local_partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  local_partitions(n, n, cur, out);
  return out;
}

Integer local_z(const Partition& lambda) {
  Integer z = 1;
  std::map<int, int> mult;
  for (int p : lambda) {
    z *= p;
    z *= ++mult[p];
  }
  return z;
}

Monomial nu_of(const Partition& lambda) {
  std::vector<Monomial::Factor> f;
  for (int p : lambda) f.emplace_back(VarId::nu(p), 1);
  return Monomial::from_factors(std::move(f));
}

// Left-to-right ranking of permutations of 1..n in the factorial number system.
long perm_rank(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  long r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += p[j] < p[i] ? 1 : 0;
    r = r * (n - i) + smaller;
  }
  return r;
}

std::vector<std::pair<int, int>> block_transpositions(const Composition& c) {
  std::vector<std::pair<int, int>> out;
  int start = 1;
  for (int part : c) {
    for (int i = start; i + 1 < start + part; ++i) out.emplace_back(i, i + 1);
    start += part;
  }
  return out;
}

std::vector<int> block_of(const Composition& c) {
  std::vector<int> b;
  for (size_t i = 0; i < c.size(); ++i)
    for (int k = 0; k < c[i]; ++k) b.push_back(static_cast<int>(i));
  return b;
}

void check_composition(const Composition& c, int limit) {
  for (int x : c)
    if (x < 0) throw InvalidArgument("composition parts must be non-negative");
  if (std::accumulate(c.begin(), c.end(), 0) > limit)
    throw BudgetExceeded("brute-force enumeration is capped at n = " + std::to_string(limit));
}

}  // namespace

long monomials_fixed(int nvars, int degree, const Partition& cycle_type) {
  check_partition(cycle_type);
  if (nvars != std::accumulate(cycle_type.begin(), cycle_type.end(), 0))
    throw InvalidArgument("monomials_fixed: n must equal |cycle type|");
  if (degree < 0) return 0;
  if (nvars == 0) return degree == 0 ? 1 : 0;
  if (binomial(static_cast<unsigned long>(nvars + degree - 1), static_cast<unsigned long>(degree)) > 1000000)
    throw BudgetExceeded("monomials_fixed: more than 10^6 monomials");
  const Permutation sigma = Permutation::of_type(cycle_type);
  std::vector<int> e(static_cast<size_t>(nvars), 0);
  long fixed = 0;
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == nvars - 1) {
      e[i] = left;
      bool ok = true;
      for (int x = 1; x <= nvars && ok; ++x) ok = e[sigma(x) - 1] == e[x - 1];
      fixed += ok ? 1 : 0;
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, degree);
  return fixed;
}

ClassFunction sym_vn_classfn(int n, int k) {
  if (n < 1 || k < 0) throw InvalidArgument("sym_vn_classfn needs n >= 1 and k >= 0");
  ClassFunction f(n);
  for (const Partition& lambda : local_partitions(n)) {
    long v = monomials_fixed(n, k, lambda) - (k > 0 ? monomials_fixed(n, k - 1, lambda) : 0);
    f.set(lambda, Rational(v));
  }
  return f;
}

QSeries j_oracle(const TruncationPolicy& policy, int nmax, int kmax) {
  if (nmax > policy.max_weight) throw InvalidArgument("j_oracle: nmax must not exceed the weight bound");
  QSeries j(policy);
  j.add_term(Monomial{}, QRat(QPoly{1, -1}));
  if (policy.max_nu_index >= 1) j.add_term(Monomial::of(VarId::nu(1)), QRat(1));
  for (int n = 2; n <= nmax; ++n) {
    for (int k = 0; k <= kmax; ++k) {
      const ClassFunction chi = sym_vn_classfn(n, k);
      for (const Partition& lambda : local_partitions(n)) {
        if (lambda.front() > policy.max_nu_index) continue;
        const Rational c = chi.at(lambda) / Rational(local_z(lambda));
        if (!kfock::is_zero(c)) j.add_term(nu_of(lambda), QRat(QPoly::monomial(c, k)));
      }
    }
  }
  return j;
}

CosetCount double_coset_brute(const Composition& lambda, const Composition& mu) {
  check_composition(lambda, 7);
  check_composition(mu, 7);
  const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
  if (n != std::accumulate(mu.begin(), mu.end(), 0)) throw InvalidArgument("lambda and mu have different sums");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const auto left = block_transpositions(mu), right = block_transpositions(lambda);
  const auto lam_block = block_of(lambda), mu_block = block_of(mu);
  std::vector<bool> seen(perms.size(), false);
  CosetCount out;
  std::vector<std::pair<std::vector<std::vector<int>>, long>> found;
  for (size_t s = 0; s < perms.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::vector<int>> gamma(lambda.size(), std::vector<int>(mu.size(), 0));
    for (int x = 1; x <= n; ++x) ++gamma[lam_block[x - 1]][mu_block[perms[s][x - 1] - 1]];
    long size = 0;
    std::vector<size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const std::vector<int> cur = perms[stack.back()];
      stack.pop_back();
      ++size;
      auto visit = [&](const std::vector<int>& q) {
        const auto r = static_cast<size_t>(perm_rank(q));
        if (!seen[r]) {
          seen[r] = true;
          stack.push_back(r);
        }
      };
      for (const auto& [a, b] : left) {  // a o sigma: swap the values a and b
        std::vector<int> q = cur;
        for (int& v : q) v = v == a ? b : v == b ? a : v;
        visit(q);
      }
      for (const auto& [a, b] : right) {  // sigma o b: swap positions
        std::vector<int> q = cur;
        std::swap(q[a - 1], q[b - 1]);
        visit(q);
      }
    }
    found.emplace_back(std::move(gamma), size);
  }
  std::sort(found.begin(), found.end());
  out.count = static_cast<long>(found.size());
  for (auto& [g, sz] : found) {
    out.gammas.push_back(g);
    out.sizes.push_back(sz);
  }
  std::sort(out.sizes.begin(), out.sizes.end());
  return out;
}

Rational induced_char_brute(const Composition& young, const std::vector<ClassFunction>& fs, const Permutation& g) {
  check_composition(young, 7);
  const int n = std::accumulate(young.begin(), young.end(), 0);
  if (g.n() != n) throw InvalidArgument("permutation degree differs from the Young subgroup's");
  if (fs.size() != young.size()) throw InvalidArgument("one class function per block is required");
  for (size_t i = 0; i < young.size(); ++i)
    if (fs[i].n() != young[i]) throw InvalidArgument("class function degree differs from its block");
  const auto blk = block_of(young);
  std::vector<int> start(young.size(), 1);
  for (size_t i = 1; i < young.size(); ++i) start[i] = start[i - 1] + young[i - 1];

  // left coset representatives x: block i is sent increasingly onto a chosen set
  std::vector<std::vector<int>> sets(young.size());
  Rational total = 0;
  std::function<void(int)> rec = [&](int elem) {
    if (elem > n) {
      Permutation x;
      x.images.resize(static_cast<size_t>(n));
      for (size_t i = 0; i < young.size(); ++i)
        for (int k = 0; k < young[i]; ++k) x.images[start[i] + k - 1] = sets[i][k];
      const Permutation h = x.inverse() * g * x;
      for (int y = 1; y <= n; ++y)
        if (blk[h(y) - 1] != blk[y - 1]) return;
      Rational term = 1;
      for (size_t i = 0; i < young.size(); ++i) {
        Permutation local = Permutation::identity(young[i]);
        for (int k = 0; k < young[i]; ++k) local.images[k] = h(start[i] + k) - start[i] + 1;
        term *= fs[i].at(local.cycle_type());
      }
      total += term;
      return;
    }
    for (size_t i = 0; i < young.size(); ++i) {
      if (static_cast<int>(sets[i].size()) == young[i]) continue;
      sets[i].push_back(elem);
      rec(elem + 1);
      sets[i].pop_back();
    }
  };
  rec(1);
  return total;
}

RSeries string_chain(PointTheory& theory, const Rational& q, int total_points) {
  if (total_points < 3) throw InvalidArgument("string_chain needs at least 3 points");
  const TruncationPolicy& p = theory.policy();
  guard_q(q, p.max_nu_index);
  const RSeries one = RSeries::one(p);
  const RSeries nu1 = p.max_nu_index >= 1 ? RSeries::variable(VarId::nu(1), p) : RSeries(p);
  const Rational K = 1 / (1 - q);
  // <g>_{0,1} = J(q) - 1 + q - nu_1, then <g,1^{k+1}> = K <g,1^k> + Q_{k+1}
  RSeries c = eval_q(theory.j_function(), q) - one + RSeries::constant(q, p) - nu1;
  c = c * K + nu1 * K;
  c = c * K + RSeries::constant(K, p);
  for (int m = 4; m <= total_points; ++m) c = c * K;
  return c;
}

RSeries trivial_rep_genfun(const TruncationPolicy& policy, int kmin) {
  RSeries s(policy);
  for (int k = std::max(kmin, 0); k <= policy.max_weight; ++k)
    for (const Partition& lambda : local_partitions(k))
      if (lambda.empty() || lambda.front() <= policy.max_nu_index)
        s.add_term(nu_of(lambda), Rational(Integer(1), local_z(lambda)));
  return s;
}

RSeries corr_formula(const TruncationPolicy& policy, const std::vector<Rational>& qs) {
  if (qs.empty()) throw InvalidArgument("corr_formula needs n >= 1");
  Rational pref = 1, base = 1;
  for (const auto& q : qs) {
    guard_q(q, policy.max_nu_index);
    pref /= 1 - q;
    if (!kfock::is_zero(q)) base += 1 / (1 / q - 1);
  }
  for (size_t i = 1; i < qs.size(); ++i) pref *= base;
  RSeries x(policy);
  for (int r = 1; r <= policy.max_nu_index; ++r) {
    Rational c = 1;
    for (const auto& q : qs)
      if (!kfock::is_zero(q)) c += 1 / (1 / power(q, static_cast<unsigned>(r)) - 1);
    x.add_term(Monomial::of(VarId::nu(r)), c / r);
  }
  return exp_series(x) * pref;
}

}  // namespace oracle

// ---------------------------------------------------------------- suites

namespace {

std::string str_of(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "(" + s + ")";
}

std::vector<Composition> compositions(int n) {
  std::vector<Composition> out;
  Composition cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = 1; p <= left; ++p) {
      cur.push_back(p);
      rec(left - p);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

void suite_j_oracle(CheckReport& rep, const TruncationPolicy& policy) {
  const int kmax = 8;
  TruncationPolicy p = policy;
  p.max_weight = std::min(policy.max_weight, 6);
  PointTheory th(p);
  const QSeries oracle = oracle::j_oracle(p, p.max_weight, kmax);
  const QSeries& j = th.j_function();
  std::set<Monomial, MonomialOrder> monos;
  for (const auto& [m, c] : oracle.terms()) monos.insert(m);
  for (const auto& [m, c] : j.terms()) monos.insert(m);
  long bad = 0;
  std::string first;
  for (const Monomial& m : monos) {
    const LaurentExpansion le = j.coeff(m).laurent_at_zero(kmax);
    const QRat o = oracle.coeff(m);
    bool ok = j.coeff(m).regular_at_zero();
    for (int k = 0; k <= kmax && ok; ++k) ok = le.at(k) == o.num().coeff(k);
    if (!ok && bad++ == 0) first = j.coeff(m).str() + " vs " + o.str();
  }
  rep.add("J closed form = Sym^k(V_n) oracle, weight <= " + std::to_string(p.max_weight) + ", q-order <= 8", bad == 0,
          bad ? std::to_string(bad) + " monomials differ; first " + first : std::to_string(monos.size()) + " monomials");
  const Monomial nu2 = Monomial::of(VarId::nu(2));
  if (p.max_nu_index >= 2 && p.max_weight >= 2)
    rep.add("J nu_2 coefficient = 1/(2(1+q))", j.coeff(nu2) == QRat(QPoly(frac(1, 2)), QPoly{1, 1}));
}

void suite_sym_trace(CheckReport& rep, int max_n) {
  using oracle::monomials_fixed;
  rep.add("fixed monomials (2,2) full cycle = 1", monomials_fixed(2, 2, {2}) == 1);
  rep.add("fixed monomials (2,3) full cycle = 0", monomials_fixed(2, 3, {2}) == 0);
  rep.add("fixed monomials n=3 k=2 type (2,1) = 2", monomials_fixed(3, 2, {2, 1}) == 2);
  long bad = 0;
  for (int n = 1; n <= std::min(max_n, 6); ++n)
    for (int k = 0; k <= 6; ++k) {
      const ClassFunction s = sym_power_char(n, k);
      for (const Partition& lam : partitions_of(n))
        if (s.at(lam) != monomials_fixed(n, k, lam)) ++bad;
    }
  rep.add("fixed-monomial counts = Sym^k(C^n) characters, n <= " + std::to_string(std::min(max_n, 6)), bad == 0,
          std::to_string(bad) + " mismatches");
  ClassFunction v3 = oracle::sym_vn_classfn(3, 1);
  rep.add("V_3 character (2,0,-1)", v3.at({1, 1, 1}) == 2 && v3.at({2, 1}) == 0 && v3.at({3}) == -1);
  bool dims = true;
  for (int k = 0; k <= 6; ++k) dims = dims && oracle::sym_vn_classfn(3, k).at({1, 1, 1}) == k + 1;
  rep.add("dim Sym^k(V_3) = k + 1", dims);
  bool triv = oracle::sym_vn_classfn(3, 0) == ClassFunction::trivial(3);
  rep.add("Sym^0(V_3) trivial", triv);
}

void suite_heisenberg(CheckReport& rep, int max_n, const TruncationPolicy& policy) {
  TruncationPolicy p{6, std::max(6, policy.max_weight), 0, 0};
  for (const auto& [name, ring] : {std::pair{std::string("point"), KRingData::point()},
                                   std::pair{std::string("rank-2 [[1,1],[1,2]]"), KRingData::synthetic_rank2()}}) {
    long bad = 0, total = 0;
    for (int m = 1; m <= 6; ++m)
      for (int l = 1; l <= 6; ++l)
        for (int a = 1; a <= ring.rank; ++a)
          for (int b = 1; b <= ring.rank; ++b) {
            ++total;
            if (!commutator_check(ring, m, l, a, b, p)) ++bad;
          }
    rep.add("Heisenberg relations m,l <= 6 on " + name, bad == 0,
            std::to_string(total - bad) + "/" + std::to_string(total) + " hold");
  }
  const int nmax = std::min(max_n, 7);
  long bad = 0;
  std::string first;
  for (int n = 1; n <= nmax; ++n) {
    TruncationPolicy q{n, n, 0, 0};
    for (const Partition& lam : partitions_of(n)) {
      const ClassFunction chi = ClassFunction::irreducible(lam);
      const RSeries ch = frobenius_ch(chi, q);
      for (int r = 1; r <= n; ++r) {
        RSeries lhs = ch.derive(VarId::nu(r)) * Rational(r);
        RSeries rhs = frobenius_ch(cyclic_trace(chi, r), q);
        if (!(lhs == rhs) && bad++ == 0) first = str_of(lam) + " r=" + std::to_string(r);
      }
    }
  }
  rep.add("r d/dnu_r ch = ch cyclic_trace on irreducibles, n <= " + std::to_string(nmax), bad == 0, first);
  bool pn = true, integral = true;
  for (int n = 1; n <= 8; ++n) {
    TruncationPolicy q{n, n, 0, 0};
    const ClassFunction p_n = ClassFunction::p_n(n);
    pn = pn && frobenius_ch(p_n, q) == RSeries::variable(VarId::nu(n), q);
    for (const Partition& lam : partitions_of(n)) {
      const Rational c = inner_product(p_n, ClassFunction::irreducible(lam));
      integral = integral && c.get_den() == 1;
    }
  }
  rep.add("ch(p_n) = nu_n, n <= 8", pn);
  rep.add("p_n has integral irreducible coefficients, n <= 8", integral);
}

void suite_cosets(CheckReport& rep, int max_n) {
  const int nb = std::min(max_n, 6);
  long bad = 0, pairs = 0;
  std::string first;
  for (int n = 1; n <= nb; ++n) {
    const auto comps = compositions(n);
    const Integer nf = factorial(static_cast<unsigned long>(n));
    for (const auto& lam : comps)
      for (const auto& mu : comps) {
        ++pairs;
        const oracle::CosetCount brute = oracle::double_coset_brute(lam, mu);
        auto lib = double_cosets(lam, mu);
        std::vector<std::pair<std::vector<std::vector<int>>, long>> lp;
        Integer sum = 0;
        for (const auto& g : lib) {
          lp.emplace_back(g.gamma, g.size.get_si());
          sum += g.size;
        }
        std::sort(lp.begin(), lp.end());
        bool ok = static_cast<long>(lib.size()) == brute.count && sum == nf;
        for (size_t i = 0; ok && i < lp.size(); ++i) ok = lp[i].first == brute.gammas[i];
        std::vector<long> ls;
        for (const auto& x : lp) ls.push_back(x.second);
        std::sort(ls.begin(), ls.end());
        ok = ok && ls == brute.sizes;
        if (!ok && bad++ == 0) first = str_of(lam) + " / " + str_of(mu);
      }
  }
  rep.add("double cosets = brute-force S_n orbits, all composition pairs n <= " + std::to_string(nb), bad == 0,
          bad ? first : std::to_string(pairs) + " pairs");
  {
    auto a = oracle::double_coset_brute({2, 1}, {2, 1});
    rep.add("(2,1),(2,1): 2 cosets of sizes 2, 4", a.count == 2 && a.sizes == std::vector<long>{2, 4});
    auto b = oracle::double_coset_brute({3}, {1, 1, 1});
    rep.add("(3),(1,1,1): 1 coset of size 6", b.count == 1 && b.sizes == std::vector<long>{6});
  }
  bool sums = true;
  for (int n = 1; n <= 7; ++n) {
    const Integer nf = factorial(static_cast<unsigned long>(n));
    const auto comps = compositions(n);
    for (const auto& lam : comps)
      for (const auto& mu : comps) {
        Integer s = 0;
        for (const auto& g : double_cosets(lam, mu)) s += g.size;
        sums = sums && s == nf;
      }
  }
  rep.add("double_cosets sizes sum to n!, all composition pairs n <= 7", sums);
  // sum_gamma 1/gamma! row by row over the remaining column sums
  bool dp_ok = true;
  for (int n = 1; n <= 10; ++n) {
    for (const Partition& lam : partitions_of(n))
      for (const Partition& mu : partitions_of(n)) {
        std::map<std::pair<size_t, std::vector<int>>, Rational> memo;
        std::function<Rational(size_t, const std::vector<int>&)> S = [&](size_t i, const std::vector<int>& cols) {
          if (i == lam.size()) return Rational(std::all_of(cols.begin(), cols.end(), [](int c) { return c == 0; }) ? 1 : 0);
          auto key = std::make_pair(i, cols);
          if (auto it = memo.find(key); it != memo.end()) return it->second;
          Rational total = 0;
          std::vector<int> rest = cols;
          std::function<void(size_t, int, const Rational&)> row = [&](size_t j, int left, const Rational& w) {
            if (j + 1 == cols.size()) {
              if (left > rest[j]) return;
              rest[j] -= left;
              total += w / Rational(factorial(static_cast<unsigned long>(left))) * S(i + 1, rest);
              rest[j] += left;
              return;
            }
            for (int x = 0; x <= std::min(left, rest[j]); ++x) {
              rest[j] -= x;
              row(j + 1, left - x, w / Rational(factorial(static_cast<unsigned long>(x))));
              rest[j] += x;
            }
          };
          row(0, lam[i], Rational(1));
          memo.emplace(key, total);
          return total;
        };
        const Rational s = S(0, mu) * Rational(composition_factorial(lam) * composition_factorial(mu));
        dp_ok = dp_ok && s == Rational(factorial(static_cast<unsigned long>(n)));
      }
  }
  sums = dp_ok;
  rep.add("sum of lambda! mu! / gamma! = n!, n <= 10", sums);

  // induced characters on irreducible outer products
  long ibad = 0, cases = 0;
  std::string ifirst;
  for (int n = 1; n <= nb; ++n) {
    for (const auto& young : compositions(n)) {
      std::vector<ClassFunction> fs(young.size());
      std::function<void(size_t)> rec = [&](size_t i) {
        if (i == young.size()) {
          ClassFunction ind = fs[0];
          for (size_t k = 1; k < fs.size(); ++k) ind = induce_product(ind, fs[k]);
          for (const Partition& mu : partitions_of(n)) {
            ++cases;
            if (oracle::induced_char_brute(young, fs, Permutation::of_type(mu)) != ind.at(mu) && ibad++ == 0)
              ifirst = str_of(young) + " at " + str_of(mu);
          }
          return;
        }
        for (const Partition& lam : partitions_of(young[i])) {
          fs[i] = ClassFunction::irreducible(lam);
          rec(i + 1);
        }
      };
      rec(0);
    }
  }
  rep.add("induced characters = coset sums, all Young subgroups n <= " + std::to_string(nb), ibad == 0,
          ibad ? ifirst : std::to_string(cases) + " values");
  {
    std::vector<ClassFunction> tt{ClassFunction::trivial(1), ClassFunction::trivial(1)};
    const Rational at_id = oracle::induced_char_brute({1, 1}, tt, Permutation::identity(2));
    const Rational at_sw = oracle::induced_char_brute({1, 1}, tt, Permutation::of_type({2}));
    const ClassFunction ind = induce_product(ClassFunction::trivial(1), ClassFunction::trivial(1));
    rep.add("Ind from S_1 x S_1 of trivial = (2, 0)", at_id == 2 && at_sw == 0 && ind.at({1, 1}) == 2 && ind.at({2}) == 0);
  }
}

void suite_string_chain(CheckReport& rep, const TruncationPolicy& policy) {
  PointTheory th(policy);
  for (const Rational& q : {frac(1, 2), frac(1, 3)}) {
    for (int m = 3; m <= 6; ++m) {
      const RSeries chain = oracle::string_chain(th, q, m);
      rep.add("string chain m=" + std::to_string(m) + " q=" + to_string(q), chain == th.corr_strip_ones({q}, m - 1));
    }
  }
  rep.add("string chain m=3 q=1/2 at nu=0 is 2", oracle::string_chain(th, frac(1, 2), 3).constant_term() == 2);
  const auto samples = default_q_samples(policy.max_nu_index);
  for (size_t n = 1; n <= std::min<size_t>(3, samples.size()); ++n) {
    std::vector<Rational> qs(samples.begin(), samples.begin() + static_cast<long>(n));
    rep.add("closed formula n=" + std::to_string(n), oracle::corr_formula(policy, qs) == th.corr_two_ones(qs));
  }
  const RSeries h1 = oracle::trivial_rep_genfun(policy, 1);
  rep.add("sum_{k>=1} h_k = G - 1", h1 == th.metric_g() - RSeries::one(policy));
  rep.add("sum_{k>=1} h_k = <1,1>_{0,2}", h1 == th.correlator({Slot::one(), Slot::one()}));
  rep.add("sum_{k>=3} h_k = <>_{0,0}", oracle::trivial_rep_genfun(policy, 3) == th.zero_point());
}

}  // namespace

CheckReport check_correlator_chain(PointTheory& th) {
  CheckReport rep;
  const TruncationPolicy& p = th.policy();
  const auto samples = default_q_samples(p.max_nu_index);
  const size_t ns = std::min<size_t>(3, samples.size());
  // (i) every ordering of the samples gives the same value, equal to the formula in that order
  for (size_t n = 1; n <= ns; ++n) {
    std::vector<Rational> qs(samples.begin(), samples.begin() + static_cast<long>(n));
    std::sort(qs.begin(), qs.end());
    const RSeries ref = th.corr_two_ones(qs);
    bool ok = true;
    do ok = ok && th.corr_two_ones(qs) == ref && oracle::corr_formula(p, qs) == ref;
    while (std::next_permutation(qs.begin(), qs.end()));
    rep.add("q-permutation symmetry n=" + std::to_string(n), ok);
  }
  // (ii) n = 1: J / (1-q)^2
  {
    const QRat omq = 1 - QRat::q();
    const QSeries expect = th.j_function() * (1 / (omq * omq));
    rep.add("<1/(1-qL),1,1> = J/(1-q)^2 in symbolic q", th.corr_one_geom_symbolic() == expect);
    bool ok = true;
    for (const auto& q : samples) ok = ok && th.corr_two_ones({q}) == eval_q(expect, q);
    rep.add("<1/(1-qL),1,1> = J/(1-q)^2 at the samples", ok);
  }
  // (iii) appending q = 0 multiplies by 1 + sum q/(1-q)
  for (size_t n = 1; n <= ns; ++n) {
    std::vector<Rational> qs(samples.begin(), samples.begin() + static_cast<long>(n));
    Rational K = 1;
    for (const auto& q : qs) K += q / (1 - q);
    auto padded = qs;
    padded.push_back(0);
    const RSeries base = th.corr_two_ones(qs) * K;
    rep.add("padding by q=0, n=" + std::to_string(n),
            th.corr_two_ones(padded) == base && oracle::corr_formula(p, padded) == base);
  }
  // (iv) string chain from J
  for (size_t i = 0; i < std::min<size_t>(2, samples.size()); ++i)
    for (int m = 3; m <= 6; ++m)
      rep.add("string chain m=" + std::to_string(m) + " q=" + to_string(samples[i]),
              oracle::string_chain(th, samples[i], m) == th.corr_strip_ones({samples[i]}, m - 1));
  // (v) <L^a, L^b, 1, 1>(0) = a + b + 1
  bool v = true;
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; a + b <= 6; ++b) v = v && th.corr_poly_insertions({a, b}).constant_term() == a + b + 1;
  rep.add("<L^a,L^b,1,1>(0) = a+b+1, a+b <= 6", v);
  return rep;
}

const std::vector<std::string>& oracle_suite_names() {
  static const std::vector<std::string> names{"j-oracle", "cosets", "heisenberg", "sym-trace", "string-chain", "corr-chain"};
  return names;
}

CheckReport run_oracle_suite(const std::string& suite, int max_n, const TruncationPolicy& policy) {
  if (max_n < 1) throw InvalidArgument("max-n must be positive");
  CheckReport rep;
  if (suite == "j-oracle") suite_j_oracle(rep, policy);
  else if (suite == "cosets") suite_cosets(rep, max_n);
  else if (suite == "heisenberg") suite_heisenberg(rep, max_n, policy);
  else if (suite == "sym-trace") suite_sym_trace(rep, max_n);
  else if (suite == "string-chain") suite_string_chain(rep, policy);
  else if (suite == "corr-chain") {
    PointTheory th(policy);
    rep = check_correlator_chain(th);
  }
  else throw InvalidArgument("unknown oracle suite '" + suite + "'");
  return rep;
}

}  // namespace kfock
