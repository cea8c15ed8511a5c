#include "starlike/json_io.hpp"

namespace starlike {

nlohmann::ordered_json to_json(const DiagonalProfile& profile) {
  nlohmann::ordered_json values = nlohmann::ordered_json::array();
  for (const Rational& value : profile.values) values.push_back(to_string(value));
  return {{"alpha", to_string(profile.alpha)},
          {"values", std::move(values)},
          {"inertia", {profile.inertia.neg, profile.inertia.zero, profile.inertia.pos}}};
}

nlohmann::ordered_json to_json(const ComparisonResult& result) {
  return {{"verdict", result.verdict == IndexOrder::less ? "less" : "greater"},
          {"witness", to_string(result.witness)}};
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const auto& failure : report.failures) {
    nlohmann::ordered_json row{{"a", failure.a}, {"predicate", failure.predicate}};
    if (!failure.b.empty()) row["b"] = failure.b;
    failures.push_back(std::move(row));
  }
  return {{"suite", report.suite},
          {"n", report.n},
          {"pairs_checked", report.pairs_checked},
          {"spot_checks", report.spot_checks},
          {"tallies",
           {{"type_i", report.type_i},
            {"type_ii", report.type_ii},
            {"type_iii_alpha_t1_r", report.type_iii_alpha},
            {"type_iii_class_reset", report.type_iii_reset}}},
          {"failures", std::move(failures)},
          {"wall_time_seconds", report.wall_time_seconds}};
}

}  // namespace starlike
