#include "kfock/json_io.hpp"

#include "kfock/errors.hpp"

namespace kfock {

namespace {

int get_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw InvalidArgument(std::string("policy field '") + key + "' must be an integer");
  return j.at(key).get<int>();
}

Json poly_to_json(const QPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

}  // namespace

Json policy_to_json(const TruncationPolicy& p) {
  return Json{{"R", p.max_nu_index}, {"D", p.max_weight}, {"K_t", p.max_t_index}, {"T", p.max_t_degree}};
}

TruncationPolicy policy_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("policy must be an object");
  TruncationPolicy p{get_int(j, "R"), get_int(j, "D"), get_int(j, "K_t"), get_int(j, "T")};
  p.validate();
  return p;
}

Json monomial_to_json(const Monomial& m) {
  Json o = Json::object();
  for (const auto& [v, e] : m.factors()) o[v.name()] = e;
  return o;
}

Monomial monomial_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("monomial must be an object of variable exponents");
  std::vector<Monomial::Factor> f;
  for (const auto& [name, e] : j.items()) {
    if (!e.is_number_integer() || e.get<long>() < 0 || e.get<long>() > 1000)
      throw InvalidArgument("exponent of " + name + " must be a small non-negative integer");
    f.emplace_back(VarId::parse(name), e.get<int>());
  }
  return Monomial::from_factors(std::move(f));
}

Json series_to_json(const RSeries& s) {
  Json terms = Json::array();
  for (const auto& [m, c] : s.terms()) terms.push_back(Json{{"monomial", monomial_to_json(m)}, {"coeff", to_string(c)}});
  return Json{{"policy", policy_to_json(s.policy())}, {"terms", std::move(terms)}};
}

Json series_to_json(const QSeries& s, int qorder) {
  Json terms = Json::array();
  for (const auto& [m, c] : s.terms()) {
    Json t{{"monomial", monomial_to_json(m)}, {"coeff", Json{{"num", poly_to_json(c.num())}, {"den", poly_to_json(c.den())}}}};
    if (qorder >= 0) {
      if (!c.regular_at_zero()) throw DomainError("q-expansion requested for a coefficient with a pole at q = 0");
      const LaurentExpansion le = c.laurent_at_zero(qorder);
      Json e = Json::array();
      for (int k = 0; k <= qorder; ++k) e.push_back(to_string(le.at(k)));
      t["q_expansion"] = std::move(e);
    }
    terms.push_back(std::move(t));
  }
  return Json{{"policy", policy_to_json(s.policy())}, {"terms", std::move(terms)}};
}

RSeries series_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("policy") || !j.contains("terms"))
    throw InvalidArgument("series JSON needs 'policy' and 'terms'");
  const TruncationPolicy p = policy_from_json(j.at("policy"));
  const Json& terms = j.at("terms");
  if (!terms.is_array()) throw InvalidArgument("'terms' must be an array");
  RSeries s(p);
  for (const Json& t : terms) {
    if (!t.is_object() || !t.contains("monomial") || !t.contains("coeff") || !t.at("coeff").is_string())
      throw InvalidArgument("each term needs a 'monomial' object and a 'coeff' string");
    const Monomial m = monomial_from_json(t.at("monomial"));
    for (const auto& [v, e] : m.factors()) s.require_var(v);
    if (!p.admits(m)) throw PolicyMismatch("term outside the declared truncation policy");
    s.add_term(m, parse_rational(t.at("coeff").get<std::string>()));
  }
  return s;
}

Json report_to_json(const CheckReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.results) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return Json{{"pass", r.pass()}, {"checks", std::move(checks)}};
}

std::string series_to_text(const RSeries& s) {
  if (s.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : s.terms()) {
    std::string mono;
    for (const auto& [v, e] : m.factors()) mono += (mono.empty() ? "" : "*") + v.name() + (e > 1 ? "^" + std::to_string(e) : "");
    const bool neg = sgn(c) < 0;
    const Rational a = abs(c);
    std::string term = mono.empty() ? to_string(a) : (a == 1 ? mono : to_string(a) + "*" + mono);
    if (out.empty()) out = (neg ? "-" : "") + term;
    else out += (neg ? " - " : " + ") + term;
  }
  return out;
}

}  // namespace kfock
