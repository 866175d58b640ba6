#include "exactform/fuzz.hpp"

#include "exactform/calculus.hpp"
#include "exactform/term_sum.hpp"

#include <algorithm>
#include <cassert>

namespace exactform {

namespace {

const char* kVarNames[] = {"x", "y", "z", "u", "v", "w"};

Expr random_atom(SplitMix64& rng, const std::string& var) {
    const Expr v = Expr::variable(var);
    const auto pick = rng.next_below(8);
    if (pick < 4) // v^k, k = 1..4
        return Expr::pow(v, Expr::integer(static_cast<long long>(pick) + 1));
    const Expr av = Expr::integer(rng.next_int(1, 3)) * v;
    switch (pick) {
    case 4: return Expr::sin(av);
    case 5: return Expr::cos(av);
    case 6: return Expr::exp(av);
    default: return Expr::ln(v); // ln only of the bare variable
    }
}

Rational random_coefficient(SplitMix64& rng) {
    const long long num = rng.next_int(1, 5);
    const long long den = rng.next_int(1, 5);
    const bool negative = rng.next_below(2) == 1;
    return Rational(negative ? -num : num, den);
}

} // namespace

GeneratedPotential generate_potential(const GenConfig& cfg) {
    assert(cfg.num_vars >= 2 && cfg.num_vars <= 6);
    assert(cfg.num_terms >= 1 && cfg.num_terms <= 8);

    GeneratedPotential out;
    for (int i = 0; i < cfg.num_vars; ++i) out.variables.push_back(kVarNames[i]);

    SplitMix64 rng(cfg.seed);
    std::vector<CanonicalTerm> terms;
    const int max_tries = 64 * cfg.num_terms;
    int tries = 0;
    while (static_cast<int>(terms.size()) < cfg.num_terms && tries < max_tries) {
        ++tries;
        const Rational coef = random_coefficient(rng);
        // uniform nonempty variable subset
        const std::uint64_t mask =
            1 + rng.next_below((std::uint64_t(1) << cfg.num_vars) - 1);
        std::vector<Expr> factors;
        factors.push_back(Expr::constant(coef));
        for (int i = 0; i < cfg.num_vars; ++i)
            if (mask & (std::uint64_t(1) << i)) factors.push_back(random_atom(rng, out.variables[i]));
        TermSum ts = canonicalize(Expr::product(std::move(factors)));
        assert(ts.terms().size() == 1 && ts.constant() == 0);
        const CanonicalTerm& t = ts.terms().front();

        bool collides = false;
        for (const auto& existing : terms)
            if (compare_structure(existing, t) == 0) {
                collides = true;
                break;
            }
        if (!collides) terms.push_back(t);
    }
    if (static_cast<int>(terms.size()) < cfg.num_terms)
        out.warnings.push_back("term count reduced to " + std::to_string(terms.size()) +
                               " after repeated structure collisions");

    TermSum phi;
    for (auto& t : terms) phi.add_term(std::move(t));
    out.potential = render(phi);
    return out; // box: default [0.5, 2] intervals suit every pool atom
}

DifferentialForm derive_form(const Expr& phi, const std::vector<std::string>& vars) {
    std::vector<FormEntry> entries;
    entries.reserve(vars.size());
    for (const auto& v : vars) entries.push_back({v, differentiate(phi, v)});
    return DifferentialForm(std::move(entries));
}

TrialReport round_trip(const GenConfig& cfg) {
    TrialReport r;
    r.seed = cfg.seed;
    r.num_vars = cfg.num_vars;
    r.num_terms = cfg.num_terms;

    GeneratedPotential gen = generate_potential(cfg);
    r.warnings = gen.warnings;

    SamplingConfig scfg;
    scfg.box = gen.box;
    scfg.seed = SplitMix64::at(cfg.seed, 1); // sampling stream, distinct from generation

    try {
        DifferentialForm form = derive_form(gen.potential, gen.variables);
        Solution basic = solve_basic(form, scfg);
        Solution standard = solve_standard(form, scfg);
        r.basic_tally = basic.tally;
        r.standard_tally = standard.tally;
        for (const auto& w : basic.warnings) r.warnings.push_back("basic: " + w);
        for (const auto& w : standard.warnings) r.warnings.push_back("standard: " + w);
        r.basic_vs_phi = equivalence(gen.potential, basic.potential, scfg);
        r.standard_vs_phi = equivalence(gen.potential, standard.potential, scfg);
        r.basic_vs_standard = equivalence(basic.potential, standard.potential, scfg);
        auto fine = [](Equivalence e) { return e != Equivalence::Different; };
        r.ok = fine(r.basic_vs_phi) && fine(r.standard_vs_phi) && fine(r.basic_vs_standard);
        if (!r.ok) r.error = "potentials differ beyond an additive constant";
    } catch (const Error& e) {
        r.ok = false;
        r.error = e.what();
    }
    return r;
}

TrialSummary run_trials(std::uint64_t master_seed, int trials, int vars_min, int vars_max) {
    TrialSummary summary;
    summary.trials = trials;

    std::vector<TallyStat> stats;
    for (int i = 0; i < trials; ++i) {
        const std::uint64_t trial_seed = SplitMix64::at(master_seed, static_cast<std::uint64_t>(i));
        SplitMix64 shape(trial_seed);
        GenConfig cfg;
        cfg.num_vars = static_cast<int>(shape.next_int(vars_min, vars_max));
        cfg.num_terms = static_cast<int>(shape.next_int(1, 8));
        cfg.seed = shape.next();
        TrialReport r = round_trip(cfg);
        r.seed = trial_seed; // replay handle: shape and generator both derive from it
        if (r.ok) {
            ++summary.passes;
            auto it = std::find_if(stats.begin(), stats.end(), [&](const TallyStat& s) {
                return s.num_vars == cfg.num_vars;
            });
            if (it == stats.end()) {
                stats.push_back({cfg.num_vars, 0, 0.0, 0.0});
                it = stats.end() - 1;
            }
            ++it->count;
            it->mean_standard_integrations += r.standard_tally.integrations;
            it->mean_standard_differentiations += r.standard_tally.differentiations;
        }
        summary.reports.push_back(std::move(r));
    }
    for (auto& s : stats) {
        s.mean_standard_integrations /= s.count;
        s.mean_standard_differentiations /= s.count;
    }
    std::sort(stats.begin(), stats.end(),
              [](const TallyStat& a, const TallyStat& b) { return a.num_vars < b.num_vars; });
    summary.tally_stats = std::move(stats);
    return summary;
}

} // namespace exactform
