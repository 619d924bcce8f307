#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kfock/kfock.h"

using Json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct Failure {
  kf_status status;
};

void ok(kf_status s) {
  if (s != KF_OK) throw Failure{s};
}

std::string take(char* s) {
  std::string out(s);
  kf_string_free(s);
  return out;
}

using TheoryPtr = std::unique_ptr<kf_theory, decltype(&kf_theory_destroy)>;
using SeriesPtr = std::unique_ptr<kf_series, decltype(&kf_series_destroy)>;

TheoryPtr make_theory(const kf_policy& p) {
  kf_theory* t = nullptr;
  ok(kf_theory_create(&p, &t));
  return TheoryPtr(t, kf_theory_destroy);
}

Json series_json(kf_series* raw) {
  SeriesPtr s(raw, kf_series_destroy);
  char* out = nullptr;
  ok(kf_series_to_json(s.get(), &out));
  return Json::parse(take(out));
}

Json policy_json(const kf_policy& p) { return Json{{"R", p.R}, {"D", p.D}, {"K_t", p.K_t}, {"T", p.T}}; }

std::string coeff_text(const Json& c) {
  if (c.is_string()) return c.get<std::string>();
  auto poly = [](const Json& a) {
    std::string s;
    for (size_t k = 0; k < a.size(); ++k) {
      const std::string v = a[k].get<std::string>();
      if (v == "0") continue;
      s += (s.empty() ? "" : " + ") + (k == 0 ? v : v + "*q" + (k > 1 ? "^" + std::to_string(k) : ""));
    }
    return s.empty() ? std::string("0") : s;
  };
  const std::string num = poly(c.at("num")), den = poly(c.at("den"));
  return den == "1" ? "(" + num + ")" : "(" + num + ")/(" + den + ")";
}

std::string series_text(const Json& s) {
  std::string out;
  for (const auto& t : s.at("terms")) {
    std::string mono;
    for (const auto& [name, e] : t.at("monomial").items())
      mono += (mono.empty() ? "" : "*") + name + (e.get<int>() > 1 ? "^" + std::to_string(e.get<int>()) : "");
    std::string term = coeff_text(t.at("coeff"));
    if (!mono.empty()) term = term == "1" ? mono : term + "*" + mono;
    out += (out.empty() ? "" : "\n+ ") + term;
    if (t.contains("q_expansion")) {
      std::string e;
      for (const auto& c : t.at("q_expansion")) e += (e.empty() ? "" : ", ") + c.get<std::string>();
      out += "    [q-expansion: " + e + "]";
    }
  }
  return out.empty() ? "0" : out;
}

std::string report_text(const Json& r) {
  std::string out;
  if (r.contains("suites")) {
    for (const auto& [name, rep] : r.at("suites").items()) out += "== " + name + "\n" + report_text(rep);
    return out;
  }
  for (const auto& c : r.at("checks")) {
    out += std::string(c.at("pass").get<bool>() ? "PASS  " : "FAIL  ") + c.at("name").get<std::string>();
    const std::string d = c.at("detail").get<std::string>();
    if (!d.empty()) out += "  (" + d + ")";
    out += "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the K-theoretic Fock space and genus-0 invariants of the point"};
  app.require_subcommand(1);
  app.fallthrough();

  kf_policy policy = kf_default_policy();
  bool json = false;
  app.add_option("--weight", policy.D, "maximal nu-weight D")->check(CLI::NonNegativeNumber);
  app.add_option("--tdeg", policy.T, "maximal t-degree T")->check(CLI::NonNegativeNumber);
  app.add_option("--nu-max", policy.R, "largest nu index R")->check(CLI::NonNegativeNumber);
  app.add_option("--t-max", policy.K_t, "largest t index K_t")->check(CLI::NonNegativeNumber);
  app.add_flag("--json", json, "emit JSON instead of text");

  int qorder = -1;
  auto* jfun = app.add_subcommand("jfun", "J-function");
  jfun->add_option("--qorder", qorder, "expand coefficients in q up to this order")->check(CLI::NonNegativeNumber);

  auto* smatrix = app.add_subcommand("smatrix", "S-matrix S(nu, q)");

  std::vector<std::string> qs;
  auto* corr = app.add_subcommand("corr", "<1/(1-q_1 L), ..., 1/(1-q_n L), 1, 1>");
  corr->add_option("--q", qs, "insertion parameter p/q (repeatable)")->required();

  std::vector<int> exps;
  auto* corr_poly = app.add_subcommand("corr-poly", "<L^{e_1}, ..., L^{e_n}, 1, 1>");
  corr_poly->add_option("--exps", exps, "comma-separated exponents")->delimiter(',')->required()->check(
      CLI::NonNegativeNumber);

  int flows = 3;
  bool check = false;
  auto* hier = app.add_subcommand("hierarchy", "topological solution and flows");
  hier->add_option("--flows", flows, "largest flow index")->check(CLI::NonNegativeNumber);
  hier->add_flag("--check", check, "verify the flow equations");

  std::string suite = "all";
  int max_n = 6;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite, std::string("one of: ") + kf_suite_names());
  verify->add_option("--max-n", max_n, "symmetric-group size cap")->check(CLI::PositiveNumber);

  int char_n = 0;
  bool table = false;
  auto* chr = app.add_subcommand("char", "character table of S_n");
  chr->add_option("--n", char_n, "n")->required()->check(CLI::NonNegativeNumber);
  chr->add_flag("--table", table, "include the character values");

  std::vector<int> lambda, mu;
  auto* cos = app.add_subcommand("cosets", "double cosets S_mu \\ S_n / S_lambda");
  cos->add_option("--lambda", lambda, "composition")->delimiter(',')->required();
  cos->add_option("--mu", mu, "composition")->delimiter(',')->required();

  bool demo = false;
  auto* fock = app.add_subcommand("fock", "Heisenberg relations in the Fock space");
  fock->add_flag("--demo", demo, "check all commutators up to R");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    Json out;
    std::optional<std::string> suite_name;
    bool pass = true;
    std::string text;
    if (*jfun) {
      auto th = make_theory(policy);
      char* s = nullptr;
      ok(kf_jfun(th.get(), qorder, &s));
      out["series"] = Json::parse(take(s));
      text = series_text(out["series"]);
    } else if (*smatrix) {
      auto th = make_theory(policy);
      char* s = nullptr;
      ok(kf_smatrix(th.get(), &s));
      out["series"] = Json::parse(take(s));
      text = series_text(out["series"]);
    } else if (*corr) {
      auto th = make_theory(policy);
      std::vector<const char*> ptrs;
      for (const auto& q : qs) ptrs.push_back(q.c_str());
      kf_series* s = nullptr;
      ok(kf_corr(th.get(), ptrs.data(), ptrs.size(), &s));
      out["series"] = series_json(s);
      text = series_text(out["series"]);
    } else if (*corr_poly) {
      auto th = make_theory(policy);
      kf_series* s = nullptr;
      ok(kf_corr_poly(th.get(), exps.data(), exps.size(), &s));
      out["series"] = series_json(s);
      text = series_text(out["series"]);
    } else if (*hier) {
      auto th = make_theory(policy);
      char* s = nullptr;
      int p = 1;
      ok(kf_hierarchy(th.get(), flows, check ? 1 : 0, &s, &p));
      Json h = Json::parse(take(s));
      out["series"] = h["v"];
      out["flows"] = h["flows"];
      text = "v = " + series_text(h["v"]) + "\n";
      if (check) {
        out["report"] = h["report"];
        suite_name = "hierarchy";
        pass = p != 0;
        text += report_text(h["report"]);
      }
    } else if (*verify) {
      char* s = nullptr;
      int p = 0;
      ok(kf_verify(&policy, suite.c_str(), max_n, &s, &p));
      out["report"] = Json::parse(take(s));
      suite_name = suite;
      pass = p != 0;
      text = report_text(out["report"]);
    } else if (*chr) {
      char* s = nullptr;
      ok(kf_char_table(char_n, &s));
      Json t = Json::parse(take(s));
      if (!table) t.erase("table");
      out["characters"] = t;
      text = t.dump(1);
    } else if (*cos) {
      char* s = nullptr;
      ok(kf_cosets(lambda.data(), lambda.size(), mu.data(), mu.size(), &s));
      out["cosets"] = Json::parse(take(s));
      text = out["cosets"].dump(1);
    } else if (*fock) {
      char* s = nullptr;
      ok(kf_fock_demo(&policy, &s));
      Json r = Json::parse(take(s));
      pass = r["failures"].empty();
      suite_name = "heisenberg";
      out["report"] = r;
      text = "checked " + std::to_string(r["checked"].get<long>()) + " commutators, " +
             std::to_string(r["failures"].size()) + " failures";
    }
    out["meta"] = Json{{"policy", policy_json(policy)}, {"pass", pass}};
    out["meta"]["suite"] = suite_name ? Json(*suite_name) : Json(nullptr);
    if (json)
      std::cout << out.dump(2) << "\n";
    else
      std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n") << (suite_name ? (pass ? "PASS\n" : "FAIL\n") : "");
    return pass ? kExitOk : kExitFail;
  } catch (const Failure& f) {
    std::cerr << "error (" << kf_status_string(f.status) << "): " << kf_last_error() << "\n";
    return kExitInput;
  }
}
