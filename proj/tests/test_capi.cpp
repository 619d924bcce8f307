#include <cstring>
#include <string>

#include "doctest.h"
#include "kfock/kfock.h"

namespace {

std::string take(char* s) {
  std::string out(s);
  kf_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("theory lifecycle and correlators") {
  kf_policy p = kf_default_policy();
  CHECK(p.R == 6);
  CHECK(p.D == 6);
  p.D = 0;
  kf_theory* th = nullptr;
  REQUIRE(kf_theory_create(&p, &th) == KF_OK);
  const char* qs[] = {"1/2"};
  kf_series* s = nullptr;
  REQUIRE(kf_corr(th, qs, 1, &s) == KF_OK);
  char* c = nullptr;
  REQUIRE(kf_series_coeff(s, "{}", &c) == KF_OK);
  CHECK(take(c) == "2");
  kf_series_destroy(s);

  const char* one[] = {"1"};
  CHECK(kf_corr(th, one, 1, &s) == KF_DOMAIN_ERROR);
  CHECK(std::strlen(kf_last_error()) > 0);
  const char* fl[] = {"0.5"};
  CHECK(kf_corr(th, fl, 1, &s) == KF_INVALID_ARGUMENT);
  CHECK(kf_corr(th, nullptr, 0, &s) == KF_INVALID_ARGUMENT);

  int exps[] = {2, 3};
  REQUIRE(kf_corr_poly(th, exps, 2, &s) == KF_OK);
  REQUIRE(kf_series_coeff(s, "{}", &c) == KF_OK);
  CHECK(take(c) == "6");
  kf_series_destroy(s);
  kf_theory_destroy(th);

  p.D = -1;
  CHECK(kf_theory_create(&p, &th) == KF_INVALID_ARGUMENT);
  CHECK(std::string(kf_status_string(KF_POLICY_MISMATCH)) == "policy mismatch");
}

TEST_CASE("series handles") {
  const char* a_json = R"({"policy":{"R":2,"D":2,"K_t":0,"T":0},"terms":[{"monomial":{"nu_1":1},"coeff":"1/2"}]})";
  const char* b_json = R"({"policy":{"R":2,"D":3,"K_t":0,"T":0},"terms":[]})";
  kf_series *a = nullptr, *b = nullptr, *r = nullptr;
  REQUIRE(kf_series_from_json(a_json, &a) == KF_OK);
  REQUIRE(kf_series_from_json(b_json, &b) == KF_OK);
  CHECK(kf_series_arith(a, b, '+', &r) == KF_POLICY_MISMATCH);
  REQUIRE(kf_series_arith(a, a, '*', &r) == KF_OK);
  char* c = nullptr;
  REQUIRE(kf_series_coeff(r, R"({"nu_1":2})", &c) == KF_OK);
  CHECK(take(c) == "1/4");
  kf_series_destroy(r);
  REQUIRE(kf_series_exp(a, &r) == KF_OK);
  REQUIRE(kf_series_coeff(r, R"({"nu_1":2})", &c) == KF_OK);
  CHECK(take(c) == "1/8");
  kf_series* d = nullptr;
  REQUIRE(kf_series_derive(r, "nu_1", &d) == KF_OK);
  REQUIRE(kf_series_coeff(d, "{}", &c) == KF_OK);
  CHECK(take(c) == "1/2");
  CHECK(kf_series_derive(r, "nu_5", &d) == KF_POLICY_MISMATCH);
  char* js = nullptr;
  REQUIRE(kf_series_to_json(a, &js) == KF_OK);
  CHECK(take(js).find("\"1/2\"") != std::string::npos);
  CHECK(kf_series_from_json("{not json", &r) == KF_INVALID_ARGUMENT);
  CHECK(kf_series_exp(a, nullptr) == KF_INVALID_ARGUMENT);
  kf_series_destroy(a);
  kf_series_destroy(b);
  kf_series_destroy(r);
  kf_series_destroy(d);
}

TEST_CASE("reports and tables") {
  kf_policy p = kf_default_policy();
  char* js = nullptr;
  int pass = 0;
  REQUIRE(kf_verify(&p, "wdvv", 4, &js, &pass) == KF_OK);
  CHECK(pass == 1);
  CHECK(take(js).find("\"pass\":true") != std::string::npos);
  CHECK(kf_verify(&p, "nonsense", 4, &js, &pass) == KF_INVALID_ARGUMENT);
  REQUIRE(kf_char_table(3, &js) == KF_OK);
  CHECK(take(js).find("[[1,1,1],[-1,0,2],[1,-1,1]]") != std::string::npos);
  int lam[] = {2, 1}, mu[] = {2, 1};
  REQUIRE(kf_cosets(lam, 2, mu, 2, &js) == KF_OK);
  CHECK(take(js).find("\"total\":\"6\"") != std::string::npos);
  kf_policy small{3, 3, 0, 0};
  REQUIRE(kf_fock_demo(&small, &js) == KF_OK);
  CHECK(take(js).find("\"failures\":[]") != std::string::npos);
  kf_theory* th = nullptr;
  kf_policy hp{6, 4, 2, 2};
  REQUIRE(kf_theory_create(&hp, &th) == KF_OK);
  REQUIRE(kf_hierarchy(th, 2, 1, &js, &pass) == KF_OK);
  CHECK(pass == 1);
  kf_string_free(js);
  CHECK(kf_hierarchy(th, 5, 0, &js, &pass) == KF_INVALID_ARGUMENT);
  REQUIRE(kf_jfun(th, 3, &js) == KF_OK);
  CHECK(take(js).find("q_expansion") != std::string::npos);
  kf_theory_destroy(th);
}
