#include "exactform/equivalence.hpp"

#include "exactform/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace exactform {

const char* name_of(Equivalence v) {
    switch (v) {
    case Equivalence::Equal: return "equal";
    case Equivalence::DifferByConstant: return "differ_by_constant";
    case Equivalence::Different: return "different";
    }
    return "?";
}

Equivalence equivalence(const Expr& a, const Expr& b, const SamplingConfig& cfg) {
    if (canonically_equal(a, b)) return Equivalence::Equal;

    std::set<std::string> vars = free_vars(a);
    vars.merge(free_vars(b));
    std::vector<std::string> names(vars.begin(), vars.end());

    Expr diff = a - b;
    std::vector<double> values;
    SplitMix64 rng(cfg.seed);
    sample_valid_points(
        names, cfg.box, cfg.samples, cfg.min_valid, rng,
        [&](const Assignment& pt) { values.push_back(eval_numeric(diff, pt)); });

    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    double scale = std::max(1.0, std::max(std::fabs(*lo), std::fabs(*hi)));
    if (*hi - *lo <= cfg.tolerance * scale) return Equivalence::DifferByConstant;
    return Equivalence::Different;
}

} // namespace exactform
