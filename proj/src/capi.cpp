#include <cstdlib>
#include <cstring>
#include <future>
#include <string>

#include "kfock/errors.hpp"
#include "kfock/fock.hpp"
#include "kfock/gw_point.hpp"
#include "kfock/json_io.hpp"
#include "kfock/kfock.h"
#include "kfock/oracles.hpp"
#include "kfock/symgroup.hpp"

using namespace kfock;

struct kf_theory {
  explicit kf_theory(const TruncationPolicy& p) : th(p) {}
  PointTheory th;
};

struct kf_series {
  RSeries s;
};

namespace {

thread_local std::string last_error;

template <class F>
kf_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return KF_OK;
  } catch (const DomainError& e) {
    last_error = e.what();
    return KF_DOMAIN_ERROR;
  } catch (const PolicyMismatch& e) {
    last_error = e.what();
    return KF_POLICY_MISMATCH;
  } catch (const BudgetExceeded& e) {
    last_error = e.what();
    return KF_BUDGET_EXCEEDED;
  } catch (const ContractionFailure& e) {
    last_error = e.what();
    return KF_CONTRACTION_FAILURE;
  } catch (const InvalidArgument& e) {
    last_error = e.what();
    return KF_INVALID_ARGUMENT;
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("malformed JSON: ") + e.what();
    return KF_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return KF_BUDGET_EXCEEDED;
  } catch (const std::exception& e) {
    last_error = e.what();
    return KF_INTERNAL_ERROR;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw InvalidArgument(std::string(what) + " must not be NULL");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

TruncationPolicy to_policy(const kf_policy* p) {
  need(p, "policy");
  TruncationPolicy t{p->R, p->D, p->K_t, p->T};
  t.validate();
  if (t.max_nu_index > 64 || t.max_weight > 64 || t.max_t_index > 64 || t.max_t_degree > 16)
    throw BudgetExceeded("truncation bounds above the supported budget");
  return t;
}

const std::vector<std::string>& gw_suites() {
  static const std::vector<std::string> names{"string", "dilaton", "smatrix", "wdvv", "quadratic-form",
                                              "potential", "quantum", "hierarchy"};
  return names;
}

CheckReport run_gw_suite(const std::string& suite, const TruncationPolicy& p) {
  if (suite == "hierarchy") return check_hierarchy(p, std::min(3, p.max_t_index));
  PointTheory th(p);
  if (suite == "string") return check_identity(th, Identity::String);
  if (suite == "dilaton") return check_identity(th, Identity::Dilaton);
  if (suite == "wdvv") return check_identity(th, Identity::Wdvv);
  if (suite == "quadratic-form") return check_identity(th, Identity::UnstableQf);
  if (suite == "potential") return check_identity(th, Identity::Reconstr);
  if (suite == "quantum") return check_identity(th, Identity::Quantum);
  CheckReport r = check_identity(th, Identity::SMatrixA);
  r.merge(check_identity(th, Identity::SMatrixB));
  r.merge(check_identity(th, Identity::SMatrixC));
  return r;
}

CheckReport run_suite(const std::string& suite, int max_n, const TruncationPolicy& p) {
  for (const auto& s : gw_suites())
    if (s == suite) return run_gw_suite(suite, p);
  return run_oracle_suite(suite, max_n, p);
}

std::vector<std::string> all_suites() {
  std::vector<std::string> all = gw_suites();
  for (const auto& s : oracle_suite_names()) all.push_back(s);
  return all;
}

}  // namespace

extern "C" {

kf_policy kf_default_policy(void) {
  const TruncationPolicy d;
  return kf_policy{d.max_nu_index, d.max_weight, d.max_t_index, d.max_t_degree};
}

const char* kf_last_error(void) { return last_error.c_str(); }

const char* kf_status_string(kf_status status) {
  switch (status) {
    case KF_OK:
      return "ok";
    case KF_INVALID_ARGUMENT:
      return "invalid argument";
    case KF_DOMAIN_ERROR:
      return "domain error";
    case KF_POLICY_MISMATCH:
      return "policy mismatch";
    case KF_BUDGET_EXCEEDED:
      return "budget exceeded";
    case KF_CONTRACTION_FAILURE:
      return "contraction failure";
    case KF_INTERNAL_ERROR:
      return "internal error";
  }
  return "unknown status";
}

void kf_string_free(char* s) { std::free(s); }

kf_status kf_theory_create(const kf_policy* policy, kf_theory** out) {
  return guarded([&] {
    need(out, "out");
    *out = new kf_theory(to_policy(policy));
  });
}

void kf_theory_destroy(kf_theory* theory) { delete theory; }

kf_status kf_jfun(kf_theory* theory, int qorder, char** json_out) {
  return guarded([&] {
    need(theory, "theory");
    need(json_out, "json_out");
    if (qorder > 256) throw BudgetExceeded("q-order above 256");
    *json_out = dup(series_to_json(theory->th.j_function(), qorder).dump());
  });
}

kf_status kf_smatrix(kf_theory* theory, char** json_out) {
  return guarded([&] {
    need(theory, "theory");
    need(json_out, "json_out");
    *json_out = dup(series_to_json(theory->th.s_matrix()).dump());
  });
}

kf_status kf_metric(kf_theory* theory, kf_series** out) {
  return guarded([&] {
    need(theory, "theory");
    need(out, "out");
    *out = new kf_series{theory->th.metric_g()};
  });
}

kf_status kf_corr(kf_theory* theory, const char* const* qs, size_t n, kf_series** out) {
  return guarded([&] {
    need(theory, "theory");
    need(out, "out");
    if (n == 0) throw InvalidArgument("at least one q is required");
    need(qs, "qs");
    std::vector<Rational> values;
    for (size_t i = 0; i < n; ++i) {
      need(qs[i], "q");
      values.push_back(parse_rational(qs[i]));
    }
    if (n > 12) throw BudgetExceeded("more than 12 insertions");
    *out = new kf_series{theory->th.corr_two_ones(values)};
  });
}

kf_status kf_corr_poly(kf_theory* theory, const int* exps, size_t n, kf_series** out) {
  return guarded([&] {
    need(theory, "theory");
    need(out, "out");
    if (n == 0) throw InvalidArgument("at least one exponent is required");
    need(exps, "exps");
    if (n > 12) throw BudgetExceeded("more than 12 insertions");
    *out = new kf_series{theory->th.corr_poly_insertions(std::vector<int>(exps, exps + n))};
  });
}

kf_status kf_hierarchy(kf_theory* theory, int flows, int check, char** json_out, int* pass) {
  return guarded([&] {
    need(theory, "theory");
    need(json_out, "json_out");
    PointTheory& th = theory->th;
    if (flows < 0 || flows > th.policy().max_t_index) throw InvalidArgument("flows must lie in [0, K_t]");
    const RSeries v = th.tau_fixed_point();
    Json out{{"v", series_to_json(v)}, {"flows", Json::array()}};
    for (int n = 0; n <= flows; ++n) out["flows"].push_back(Json{{"n", n}, {"rhs", series_to_json(th.hierarchy_rhs(n, v))}});
    if (check) {
      const CheckReport r = check_hierarchy(th.policy(), flows);
      out["report"] = report_to_json(r);
      if (pass) *pass = r.pass() ? 1 : 0;
    } else if (pass) {
      *pass = 1;
    }
    *json_out = dup(out.dump());
  });
}

kf_status kf_verify(const kf_policy* policy, const char* suite, int max_n, char** json_out, int* pass) {
  return guarded([&] {
    need(suite, "suite");
    need(json_out, "json_out");
    const TruncationPolicy p = to_policy(policy);
    const std::string name(suite);
    Json out;
    bool ok = true;
    if (name == "all") {
      // independent suites run in parallel; assembly follows the fixed suite order
      std::vector<std::pair<std::string, std::future<CheckReport>>> jobs;
      for (const auto& s : all_suites())
        jobs.emplace_back(s, std::async(std::launch::async, [s, max_n, p] { return run_suite(s, max_n, p); }));
      Json suites = Json::object();
      for (auto& [s, f] : jobs) {
        const CheckReport r = f.get();
        ok = ok && r.pass();
        suites[s] = report_to_json(r);
      }
      out = Json{{"pass", ok}, {"suites", std::move(suites)}};
    } else {
      const CheckReport r = run_suite(name, max_n, p);
      ok = r.pass();
      out = report_to_json(r);
    }
    if (pass) *pass = ok ? 1 : 0;
    *json_out = dup(out.dump());
  });
}

const char* kf_suite_names(void) {
  static const std::string names = [] {
    std::string s;
    for (const auto& n : all_suites()) s += n + " ";
    return s + "all";
  }();
  return names.c_str();
}

kf_status kf_char_table(int n, char** json_out) {
  return guarded([&] {
    need(json_out, "json_out");
    if (n < 0) throw InvalidArgument("n must be non-negative");
    if (n > 20) throw BudgetExceeded("character tables are limited to n <= 20");
    const auto& parts = partitions_of(n);
    Json table = Json::array();
    for (const auto& lam : parts) {
      Json row = Json::array();
      for (const auto& mu : parts) row.push_back(irreducible_character(lam, mu));
      table.push_back(std::move(row));
    }
    *json_out = dup(Json{{"n", n}, {"irreducibles", parts}, {"classes", parts}, {"table", std::move(table)}}.dump());
  });
}

kf_status kf_cosets(const int* lambda, size_t nl, const int* mu, size_t nm, char** json_out) {
  return guarded([&] {
    need(json_out, "json_out");
    if ((nl && !lambda) || (nm && !mu)) throw InvalidArgument("composition pointer is NULL");
    const Composition l(lambda, lambda + nl), m(mu, mu + nm);
    for (int x : l)
      if (x < 0) throw InvalidArgument("composition parts must be non-negative");
    for (int x : m)
      if (x < 0) throw InvalidArgument("composition parts must be non-negative");
    int n = 0;
    for (int x : l) n += x;
    if (n > 30) throw BudgetExceeded("double cosets are limited to n <= 30");
    Json list = Json::array();
    Integer total = 0;
    for (const auto& g : double_cosets(l, m)) {
      list.push_back(Json{{"gamma", g.gamma}, {"size", g.size.get_str()}});
      total += g.size;
    }
    *json_out = dup(Json{{"lambda", l}, {"mu", m}, {"count", list.size()}, {"cosets", std::move(list)},
                         {"total", total.get_str()}}
                        .dump());
  });
}

kf_status kf_fock_demo(const kf_policy* policy, char** json_out) {
  return guarded([&] {
    need(json_out, "json_out");
    const TruncationPolicy p = to_policy(policy);
    long checked = 0;
    Json failures = Json::array();
    for (const auto& [name, ring] : {std::pair{std::string("point"), KRingData::point()},
                                     std::pair{std::string("rank2"), KRingData::synthetic_rank2()}}) {
      for (int m = 1; m <= p.max_nu_index; ++m)
        for (int l = 1; l <= p.max_nu_index; ++l)
          for (int a = 1; a <= ring.rank; ++a)
            for (int b = 1; b <= ring.rank; ++b) {
              ++checked;
              if (!commutator_check(ring, m, l, a, b, p))
                failures.push_back(Json{{"ring", name}, {"m", m}, {"l", l}, {"alpha", a}, {"beta", b}});
            }
    }
    *json_out = dup(Json{{"checked", checked}, {"failures", std::move(failures)}}.dump());
  });
}

kf_status kf_series_from_json(const char* json, kf_series** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = new kf_series{series_from_json(Json::parse(json))};
  });
}

kf_status kf_series_to_json(const kf_series* s, char** json_out) {
  return guarded([&] {
    need(s, "series");
    need(json_out, "json_out");
    *json_out = dup(series_to_json(s->s).dump());
  });
}

kf_status kf_series_arith(const kf_series* a, const kf_series* b, char op, kf_series** out) {
  return guarded([&] {
    need(a, "a");
    need(b, "b");
    need(out, "out");
    switch (op) {
      case '+':
        *out = new kf_series{a->s + b->s};
        break;
      case '-':
        *out = new kf_series{a->s - b->s};
        break;
      case '*':
        *out = new kf_series{a->s * b->s};
        break;
      default:
        throw InvalidArgument("op must be '+', '-' or '*'");
    }
  });
}

kf_status kf_series_exp(const kf_series* a, kf_series** out) {
  return guarded([&] {
    need(a, "a");
    need(out, "out");
    *out = new kf_series{exp_series(a->s)};
  });
}

kf_status kf_series_derive(const kf_series* a, const char* variable, kf_series** out) {
  return guarded([&] {
    need(a, "a");
    need(variable, "variable");
    need(out, "out");
    const VarId v = VarId::parse(variable);
    a->s.require_var(v);
    *out = new kf_series{a->s.derive(v)};
  });
}

kf_status kf_series_coeff(const kf_series* a, const char* monomial_json, char** coeff_out) {
  return guarded([&] {
    need(a, "a");
    need(monomial_json, "monomial_json");
    need(coeff_out, "coeff_out");
    *coeff_out = dup(to_string(a->s.coeff(monomial_from_json(Json::parse(monomial_json)))));
  });
}

void kf_series_destroy(kf_series* s) { delete s; }

}  // extern "C"
