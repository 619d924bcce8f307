#pragma once

#include <json.hpp>

#include "kfock/gw_point.hpp"
#include "kfock/series.hpp"

namespace kfock {

using Json = nlohmann::json;

Json policy_to_json(const TruncationPolicy& p);
TruncationPolicy policy_from_json(const Json& j);

/// {"policy": {...}, "terms": [{"monomial": {"nu_2": 1}, "coeff": "1/2"}, ...]} in canonical term order.
Json series_to_json(const RSeries& s);
/// As above with "coeff": {"num": [...], "den": [...]} (ascending powers of q); when qorder >= 0,
/// each term also carries "q_expansion": [c_0, ..., c_qorder].
Json series_to_json(const QSeries& s, int qorder = -1);
/// Strict parser for the rational form; throws InvalidArgument on any malformed field.
RSeries series_from_json(const Json& j);

Monomial monomial_from_json(const Json& j);
Json monomial_to_json(const Monomial& m);

/// {"pass": bool, "checks": [{"name", "pass", "detail"}]}.
Json report_to_json(const CheckReport& r);

/// Human-readable rendering: "2 + nu_1 + 1/2*nu_1^2".
std::string series_to_text(const RSeries& s);

}  // namespace kfock
