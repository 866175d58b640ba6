#pragma once

#include "exactform/exact.hpp"
#include "exactform/fuzz.hpp"
#include "exactform/numcheck.hpp"

#include "json.hpp"

namespace exactform {

// nlohmann ADL hooks; every report becomes a deterministic JSON object
// (alphabetical keys, expressions as formatted strings).
void to_json(nlohmann::json& j, const PairResidual& r);
void to_json(nlohmann::json& j, const ExactnessReport& r);
void to_json(nlohmann::json& j, const OperationTally& t);
void to_json(nlohmann::json& j, const VariableVerdict& v);
void to_json(nlohmann::json& j, const VerificationReport& r);
void to_json(nlohmann::json& j, const Solution& s);
void to_json(nlohmann::json& j, const MultiplicityEntry& m);
void to_json(nlohmann::json& j, const TrialReport& r);
void to_json(nlohmann::json& j, const TallyStat& s);
void to_json(nlohmann::json& j, const TrialSummary& s);
void to_json(nlohmann::json& j, const GradientCheckReport& r);
void to_json(nlohmann::json& j, const PathIndependenceReport& r);

} // namespace exactform
