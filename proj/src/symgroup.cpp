#include "kfock/symgroup.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <shared_mutex>

#include "kfock/errors.hpp"

namespace kfock {

namespace {

void gen_partitions(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

struct PartitionTables {
  std::map<int, std::vector<Partition>> lists;
  std::map<Partition, size_t> index;
};

std::shared_mutex partitions_mutex;
PartitionTables& partition_tables() {
  static PartitionTables tables;
  return tables;
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
  if (n < 0) throw InvalidArgument("partitions_of needs n >= 0");
  if (n > 40) throw BudgetExceeded("partitions_of is capped at n = 40");
  auto& t = partition_tables();
  {
    std::shared_lock lock(partitions_mutex);
    auto it = t.lists.find(n);
    if (it != t.lists.end()) return it->second;
  }
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(n, n, cur, out);
  std::unique_lock lock(partitions_mutex);
  auto [it, inserted] = t.lists.emplace(n, std::move(out));
  if (inserted)
    for (size_t i = 0; i < it->second.size(); ++i) t.index.emplace(it->second[i], i);
  return it->second;
}

void check_partition(const Partition& lambda) {
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 1 || (i > 0 && lambda[i] > lambda[i - 1]))
      throw InvalidArgument("not a partition (parts must be positive and weakly decreasing)");
  }
}

int partition_size(const Partition& lambda) { return std::accumulate(lambda.begin(), lambda.end(), 0); }

size_t partition_index(const Partition& lambda) {
  check_partition(lambda);
  partitions_of(partition_size(lambda));
  std::shared_lock lock(partitions_mutex);
  return partition_tables().index.at(lambda);
}

Integer z_of(const Partition& lambda) {
  std::map<int, int> mult;
  for (int p : lambda) ++mult[p];
  Integer z = 1;
  for (auto [k, m] : mult) {
    Integer km;
    mpz_ui_pow_ui(km.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
    z *= km * factorial(static_cast<unsigned long>(m));
  }
  return z;
}

Partition partition_union(const Partition& a, const Partition& b) {
  Partition u;
  u.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u), std::greater<>());
  return u;
}

namespace {

std::shared_mutex character_mutex;
std::map<std::pair<Partition, Partition>, long>& character_memo() {
  static std::map<std::pair<Partition, Partition>, long> memo;
  return memo;
}

// chi^lambda at cycle type mu[from..], removing rim hooks of length mu[from].
long mn_character(const Partition& lambda, const Partition& mu, size_t from) {
  if (from == mu.size()) return lambda.empty() ? 1 : 0;
  Partition rest(mu.begin() + static_cast<long>(from), mu.end());
  auto key = std::make_pair(lambda, rest);
  {
    std::shared_lock lock(character_mutex);
    auto& memo = character_memo();
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  const int r = mu[from];
  const int len = static_cast<int>(lambda.size());
  // beta-set: beta_i = lambda_i + (len - 1 - i), strictly decreasing
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
  long total = 0;
  for (int i = 0; i < len; ++i) {
    const int target = beta[i] - r;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int b : beta)
      if (b > target && b < beta[i]) ++between;
    std::vector<int> nb = beta;
    nb[i] = target;
    std::sort(nb.begin(), nb.end(), std::greater<>());
    Partition next;
    for (int j = 0; j < len; ++j) {
      const int part = nb[j] - (len - 1 - j);
      if (part > 0) next.push_back(part);
    }
    const long sub = mn_character(next, mu, from + 1);
    total += (between % 2 == 0 ? 1 : -1) * sub;
  }
  std::unique_lock lock(character_mutex);
  character_memo().emplace(std::move(key), total);
  return total;
}

}  // namespace

long irreducible_character(const Partition& lambda, const Partition& mu) {
  check_partition(lambda);
  check_partition(mu);
  if (partition_size(lambda) != partition_size(mu))
    throw InvalidArgument("irreducible_character: partitions of different sizes");
  return mn_character(lambda, mu, 0);
}

ClassFunction::ClassFunction(int n) : n_(n), values_(partitions_of(n).size()) {}

ClassFunction ClassFunction::trivial(int n) {
  ClassFunction f(n);
  std::fill(f.values_.begin(), f.values_.end(), Rational(1));
  return f;
}

ClassFunction ClassFunction::sign(int n) {
  ClassFunction f(n);
  const auto& parts = partitions_of(n);
  for (size_t i = 0; i < parts.size(); ++i) {
    const int odd_length = n - static_cast<int>(parts[i].size());  // parity of the permutation
    f.values_[i] = odd_length % 2 == 0 ? 1 : -1;
  }
  return f;
}

ClassFunction ClassFunction::irreducible(const Partition& lambda) {
  check_partition(lambda);
  const int n = partition_size(lambda);
  ClassFunction f(n);
  const auto& parts = partitions_of(n);
  for (size_t i = 0; i < parts.size(); ++i) f.values_[i] = irreducible_character(lambda, parts[i]);
  return f;
}

ClassFunction ClassFunction::p_n(int n) {
  if (n < 1) throw InvalidArgument("p_n needs n >= 1");
  ClassFunction f(n);
  f.set({n}, n);
  return f;
}

const Rational& ClassFunction::at(const Partition& mu) const {
  if (partition_size(mu) != n_) throw InvalidArgument("class function evaluated on a partition of the wrong size");
  return values_[partition_index(mu)];
}

void ClassFunction::set(const Partition& mu, const Rational& value) {
  if (partition_size(mu) != n_) throw InvalidArgument("class function set on a partition of the wrong size");
  values_[partition_index(mu)] = value;
}

void ClassFunction::check_same(const ClassFunction& o) const {
  if (n_ != o.n_) throw InvalidArgument("class functions on different symmetric groups");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  check_same(o);
  for (size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  check_same(o);
  for (size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& s) {
  for (auto& v : values_) v *= s;
  return *this;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.n() != g.n()) throw InvalidArgument("inner_product: class functions on different groups");
  const auto& parts = partitions_of(f.n());
  Rational s;
  for (size_t i = 0; i < parts.size(); ++i) s += f.values()[i] * g.values()[i] / Rational(z_of(parts[i]));
  return s;
}

ClassFunction induce_product(const ClassFunction& f, const ClassFunction& g) {
  ClassFunction h(f.n() + g.n());
  const auto& pa = partitions_of(f.n());
  const auto& pb = partitions_of(g.n());
  for (size_t i = 0; i < pa.size(); ++i) {
    if (kfock::is_zero(f.values()[i])) continue;
    for (size_t j = 0; j < pb.size(); ++j) {
      if (kfock::is_zero(g.values()[j])) continue;
      const Partition u = partition_union(pa[i], pb[j]);
      Rational w{z_of(u), z_of(pa[i]) * z_of(pb[j])};
      w.canonicalize();
      h.set(u, h.at(u) + w * f.values()[i] * g.values()[j]);
    }
  }
  return h;
}

std::map<std::pair<Partition, Partition>, Rational> restrict(const ClassFunction& f, int a, int b) {
  if (a < 0 || b < 0 || a + b != f.n()) throw InvalidArgument("restrict: split does not sum to n");
  std::map<std::pair<Partition, Partition>, Rational> out;
  for (const auto& alpha : partitions_of(a))
    for (const auto& beta : partitions_of(b)) out[{alpha, beta}] = f.at(partition_union(alpha, beta));
  return out;
}

ClassFunction cyclic_trace(const ClassFunction& f, int r) {
  if (r < 1 || r > f.n()) throw InvalidArgument("cyclic_trace needs 1 <= r <= n");
  ClassFunction g(f.n() - r);
  for (const auto& mu : partitions_of(f.n() - r)) g.set(mu, f.at(partition_union({r}, mu)));
  return g;
}

RSeries frobenius_ch(const ClassFunction& f, const TruncationPolicy& policy) {
  if (f.n() > policy.max_weight)
    throw PolicyMismatch("frobenius_ch: degree " + std::to_string(f.n()) + " exceeds the truncation weight");
  RSeries s(policy);
  const auto& parts = partitions_of(f.n());
  for (size_t i = 0; i < parts.size(); ++i) {
    if (kfock::is_zero(f.values()[i])) continue;
    std::vector<Monomial::Factor> factors;
    for (int p : parts[i]) {
      if (p > policy.max_nu_index) throw PolicyMismatch("frobenius_ch: nu_" + std::to_string(p) + " exceeds R");
      factors.emplace_back(VarId::nu(p), 1);
    }
    s.add_term(Monomial::from_factors(std::move(factors)), f.values()[i] / Rational(z_of(parts[i])));
  }
  return s;
}

ClassFunction sym_power_char(int n, int k) {
  if (n < 0 || k < 0) throw InvalidArgument("sym_power_char needs n, k >= 0");
  ClassFunction f(n);
  for (const auto& lambda : partitions_of(n)) {
    // [x^k] prod 1/(1 - x^{lambda_i})
    std::vector<Integer> c(static_cast<size_t>(k) + 1);
    c[0] = 1;
    for (int p : lambda)
      for (int e = p; e <= k; ++e) c[e] += c[e - p];
    f.set(lambda, Rational(c[k]));
  }
  return f;
}

Integer composition_factorial(const Composition& c) {
  Integer f = 1;
  for (int x : c) {
    if (x < 0) throw InvalidArgument("composition parts must be non-negative");
    f *= factorial(static_cast<unsigned long>(x));
  }
  return f;
}

std::vector<GammaCoset> double_cosets(const Composition& lambda, const Composition& mu) {
  const Integer lf = composition_factorial(lambda), mf = composition_factorial(mu);
  if (std::accumulate(lambda.begin(), lambda.end(), 0) != std::accumulate(mu.begin(), mu.end(), 0))
    throw InvalidArgument("double_cosets: lambda and mu have different sums");
  const size_t r = lambda.size(), s = mu.size();
  std::vector<GammaCoset> out;
  std::vector<std::vector<int>> gamma(r, std::vector<int>(s, 0));
  std::vector<int> col_left(mu.begin(), mu.end());
  // fill row by row; each row is a composition of lambda_i bounded by col_left
  std::function<void(size_t, size_t, int)> fill = [&](size_t i, size_t j, int row_left) {
    if (i == r) {
      if (std::all_of(col_left.begin(), col_left.end(), [](int x) { return x == 0; })) {
        Integer gf = 1;
        for (const auto& row : gamma) gf *= composition_factorial(row);
        out.push_back({gamma, lf * mf / gf});
      }
      return;
    }
    if (j + 1 == s || s == 0) {
      if (s == 0) {
        if (row_left == 0) fill(i + 1, 0, i + 1 < r ? lambda[i + 1] : 0);
        return;
      }
      if (row_left > col_left[j]) return;
      gamma[i][j] = row_left;
      col_left[j] -= row_left;
      fill(i + 1, 0, i + 1 < r ? lambda[i + 1] : 0);
      col_left[j] += row_left;
      gamma[i][j] = 0;
      return;
    }
    for (int x = std::min(row_left, col_left[j]); x >= 0; --x) {
      gamma[i][j] = x;
      col_left[j] -= x;
      fill(i, j + 1, row_left - x);
      col_left[j] += x;
    }
    gamma[i][j] = 0;
  };
  fill(0, 0, r > 0 ? lambda[0] : 0);
  return out;
}

}  // namespace kfock
