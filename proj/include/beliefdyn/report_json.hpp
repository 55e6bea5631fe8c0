#pragma once

#include "beliefdyn/config.hpp"
#include "beliefdyn/predictor.hpp"
#include "beliefdyn/verify.hpp"

namespace beliefdyn {

// JSON views of the report types. Indices are 1-based in the output to
// match the CSV header naming.
json prediction_to_json(const PredictionReport& report, const std::string& name);
json verification_to_json(const VerificationReport& report, const std::string& name);

}  // namespace beliefdyn
