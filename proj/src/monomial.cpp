#include "kfock/monomial.hpp"

#include <algorithm>
#include <charconv>

#include "kfock/errors.hpp"

namespace kfock {

VarId VarId::nu(int r, int color) {
  if (r < 1 || color < 1) throw InvalidArgument("nu variable needs r >= 1 and color >= 1");
  return VarId{VarKind::Nu, static_cast<std::uint16_t>(r), static_cast<std::uint16_t>(color)};
}

VarId VarId::t(int k) {
  if (k < 0) throw InvalidArgument("t variable needs k >= 0");
  return VarId{VarKind::T, static_cast<std::uint16_t>(k), 1};
}

std::string VarId::name() const {
  if (is_t()) return "t_" + std::to_string(index);
  std::string s = "nu_" + std::to_string(index);
  if (color != 1) s += "_" + std::to_string(color);
  return s;
}

namespace {

int parse_index(std::string_view s, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw InvalidArgument("bad variable name '" + std::string(whole) + "'");
  return value;
}

}  // namespace

VarId VarId::parse(std::string_view name) {
  if (name.starts_with("t_")) return t(parse_index(name.substr(2), name));
  if (name.starts_with("nu_")) {
    auto rest = name.substr(3);
    auto us = rest.find('_');
    if (us == std::string_view::npos) return nu(parse_index(rest, name));
    return nu(parse_index(rest.substr(0, us), name), parse_index(rest.substr(us + 1), name));
  }
  throw InvalidArgument("bad variable name '" + std::string(name) + "'");
}

Monomial Monomial::of(VarId v, int exponent) {
  return from_factors({{v, exponent}});
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [v, e] : factors) {
    if (e < 0) throw InvalidArgument("negative exponent for " + v.name());
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v)
      m.factors_.back().second += e;
    else
      m.factors_.emplace_back(v, e);
  }
  m.recompute();
  return m;
}

int Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, VarId x) { return f.first < x; });
  return it != factors_.end() && it->first == v ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  m.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin(), b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      m.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      m.factors_.push_back(*b++);
    } else {
      m.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  m.nu_weight_ = nu_weight_ + other.nu_weight_;
  m.t_degree_ = t_degree_ + other.t_degree_;
  return m;
}

Monomial Monomial::lowered(VarId v) const {
  Monomial m = *this;
  for (auto it = m.factors_.begin(); it != m.factors_.end(); ++it) {
    if (it->first == v) {
      if (--it->second == 0) m.factors_.erase(it);
      m.recompute();
      return m;
    }
  }
  throw InvalidArgument("monomial does not contain " + v.name());
}

Monomial Monomial::without(VarId v) const {
  Monomial m = *this;
  std::erase_if(m.factors_, [v](const Factor& f) { return f.first == v; });
  m.recompute();
  return m;
}

void Monomial::recompute() {
  nu_weight_ = 0;
  t_degree_ = 0;
  for (const auto& [v, e] : factors_) {
    if (v.is_nu())
      nu_weight_ += v.index * e;
    else
      t_degree_ += e;
  }
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.nu_weight() != b.nu_weight()) return a.nu_weight() < b.nu_weight();
  if (a.t_degree() != b.t_degree()) return a.t_degree() < b.t_degree();
  auto fa = a.factors(), fb = b.factors();
  return std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(), fb.end());
}

bool TruncationPolicy::contains(VarId v) const {
  if (v.is_nu()) return v.index >= 1 && v.index <= max_nu_index;
  return v.index <= max_t_index;
}

bool TruncationPolicy::within(const TruncationPolicy& o) const {
  return max_nu_index <= o.max_nu_index && max_weight <= o.max_weight && max_t_index <= o.max_t_index &&
         max_t_degree <= o.max_t_degree;
}

void TruncationPolicy::validate() const {
  if (max_nu_index < 0 || max_weight < 0 || max_t_index < 0 || max_t_degree < 0)
    throw InvalidArgument("truncation bounds must be non-negative");
}

}  // namespace kfock
