#include "exactform/report_json.hpp"

#include "exactform/parser.hpp"

namespace exactform {

using nlohmann::json;

void to_json(json& j, const PairResidual& r) {
    j = json{{"var_i", r.var_i},
             {"var_j", r.var_j},
             {"residual", format_expr(r.residual)},
             {"sampled", r.sampled},
             {"max_deviation", r.max_deviation}};
}

void to_json(json& j, const ExactnessReport& r) {
    j = json{{"exact", r.exact},
             {"used_numeric_fallback", r.used_numeric_fallback},
             {"failures", r.failures}};
}

void to_json(json& j, const OperationTally& t) {
    j = json{{"integrations", t.integrations}, {"differentiations", t.differentiations}};
}

void to_json(json& j, const VariableVerdict& v) {
    j = json{{"variable", v.variable},
             {"pass", v.pass},
             {"symbolic", v.symbolic},
             {"max_rel_deviation", v.max_rel_deviation}};
}

void to_json(json& j, const VerificationReport& r) {
    j = json{{"pass", r.pass}, {"per_variable", r.per_variable}};
}

void to_json(json& j, const Solution& s) {
    j = json{{"potential", format_expr(s.potential)},
             {"method", s.method},
             {"tally", s.tally},
             {"verification", s.verification},
             {"warnings", s.warnings}};
}

void to_json(json& j, const MultiplicityEntry& m) {
    j = json{{"term", format_expr(m.term)},
             {"observed", m.observed},
             {"expected", m.expected}};
}

void to_json(json& j, const TrialReport& r) {
    j = json{{"seed", r.seed},
             {"num_vars", r.num_vars},
             {"num_terms", r.num_terms},
             {"ok", r.ok},
             {"error", r.error},
             {"basic_vs_phi", name_of(r.basic_vs_phi)},
             {"standard_vs_phi", name_of(r.standard_vs_phi)},
             {"basic_vs_standard", name_of(r.basic_vs_standard)},
             {"basic_tally", r.basic_tally},
             {"standard_tally", r.standard_tally},
             {"warnings", r.warnings}};
}

void to_json(json& j, const TallyStat& s) {
    j = json{{"num_vars", s.num_vars},
             {"count", s.count},
             {"mean_standard_integrations", s.mean_standard_integrations},
             {"mean_standard_differentiations", s.mean_standard_differentiations}};
}

void to_json(json& j, const TrialSummary& s) {
    json failures = json::array();
    for (const auto& r : s.reports)
        if (!r.ok) failures.push_back(r);
    j = json{{"trials", s.trials},
             {"passes", s.passes},
             {"failures", failures},
             {"tally_stats", s.tally_stats}};
}

void to_json(json& j, const GradientCheckReport& r) {
    j = json{{"pass", r.pass},
             {"points", r.points},
             {"max_rel_deviation", r.max_rel_deviation},
             {"worst_variable", r.worst_variable}};
}

void to_json(json& j, const PathIndependenceReport& r) {
    j = json{{"pass", r.pass},
             {"forward", r.forward},
             {"reversed", r.reversed},
             {"deviation", r.deviation}};
}

} // namespace exactform
