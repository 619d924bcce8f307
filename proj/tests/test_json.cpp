#include "doctest.h"
#include "kfock/json_io.hpp"
#include "test_util.hpp"

using namespace kft;

TEST_CASE("series JSON round trip") {
  auto p = policy(6, 6, 4, 3);
  std::mt19937 rng(7);
  for (int i = 0; i < 20; ++i) {
    RSeries s = random_series(rng, p, 12);
    CHECK(series_from_json(series_to_json(s)) == s);
  }
  RSeries x = RSeries::term(Monomial::from_factors({{nu(2), 1}, {t(0), 3}}), frac(1, 2), p);
  Json j = series_to_json(x);
  CHECK(j["terms"][0]["coeff"] == "1/2");
  CHECK(j["terms"][0]["monomial"]["nu_2"] == 1);
  CHECK(j["terms"][0]["monomial"]["t_0"] == 3);
  CHECK(j["policy"]["K_t"] == 4);
}

TEST_CASE("strict JSON parsing") {
  Json good = Json::parse(R"({"policy":{"R":2,"D":2,"K_t":0,"T":0},"terms":[{"monomial":{"nu_1":1},"coeff":"3"}]})");
  CHECK(series_from_json(good).size() == 1);
  Json fl = good;
  fl["terms"][0]["coeff"] = "0.5";
  CHECK_THROWS_AS(series_from_json(fl), InvalidArgument);
  Json num = good;
  num["terms"][0]["coeff"] = 3;
  CHECK_THROWS_AS(series_from_json(num), InvalidArgument);
  Json outside = good;
  outside["terms"][0]["monomial"] = Json{{"nu_3", 1}};
  CHECK_THROWS_AS(series_from_json(outside), PolicyMismatch);
  Json heavy = good;
  heavy["terms"][0]["monomial"] = Json{{"nu_2", 2}};
  CHECK_THROWS_AS(series_from_json(heavy), PolicyMismatch);
  Json badvar = good;
  badvar["terms"][0]["monomial"] = Json{{"x", 1}};
  CHECK_THROWS_AS(series_from_json(badvar), InvalidArgument);
}

TEST_CASE("q-series JSON and text") {
  auto p = policy(2, 2, 0, 0);
  QSeries s(p);
  s.add_term(Monomial::of(nu(2)), QRat(QPoly(frac(1, 2)), QPoly{1, 1}));
  Json j = series_to_json(s, 3);
  CHECK(j["terms"][0]["coeff"]["den"] == Json::array({"1", "1"}));
  CHECK(j["terms"][0]["q_expansion"] == Json::array({"1/2", "-1/2", "1/2", "-1/2"}));
  RSeries r = RSeries::constant(2, p) - RSeries::variable(nu(1), p) * frac(1, 2);
  CHECK(series_to_text(r) == "2 - 1/2*nu_1");
}
