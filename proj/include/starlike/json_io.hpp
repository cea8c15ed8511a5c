#pragma once

#include <json.hpp>

#include "starlike/index.hpp"
#include "starlike/spectra.hpp"
#include "starlike/verify.hpp"

namespace starlike {

// Serialized forms keep every certified quantity as an exact "p/q" string;
// doubles appear only in clearly labeled approximations.

nlohmann::ordered_json to_json(const DiagonalProfile& profile);
nlohmann::ordered_json to_json(const ComparisonResult& result);
nlohmann::ordered_json to_json(const VerificationReport& report);

}  // namespace starlike
