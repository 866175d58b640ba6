#include "exactform/exact.hpp"

#include "exactform/parser.hpp"
#include "exactform/term_sum.hpp"

#include <algorithm>
#include <cmath>

namespace exactform {

namespace {

// union of free vars across all coefficients plus the form variables
std::vector<std::string> sampling_vars(const DifferentialForm& f) {
    std::set<std::string> vars;
    for (const auto& e : f.entries()) {
        vars.insert(e.variable);
        auto fv = free_vars(e.coefficient);
        vars.insert(fv.begin(), fv.end());
    }
    return {vars.begin(), vars.end()};
}

// max |residual| over sampled points; false when sampling failed
bool sample_max_abs(const Expr& residual, const std::vector<std::string>& vars,
                    const SamplingConfig& cfg, double& out_max) {
    SplitMix64 rng(cfg.seed);
    try {
        double mx = 0.0;
        sample_valid_points(vars, cfg.box, cfg.samples, cfg.min_valid, rng,
                            [&](const Assignment& pt) {
                                mx = std::max(mx, std::fabs(eval_numeric(residual, pt)));
                            });
        out_max = mx;
        return true;
    } catch (const InsufficientSamplesError&) {
        return false;
    }
}

} // namespace

ExactnessReport check_exact(const DifferentialForm& f, const SamplingConfig& cfg) {
    ExactnessReport report;
    const auto& entries = f.entries();
    const auto vars = sampling_vars(f);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            Expr dij = differentiate(entries[i].coefficient, entries[j].variable);
            Expr dji = differentiate(entries[j].coefficient, entries[i].variable);
            TermSum residual = add(canonicalize(dij), mul(canonicalize(dji), TermSum(Rational(-1))));
            if (residual.is_zero()) continue;

            PairResidual pr;
            pr.var_i = entries[i].variable;
            pr.var_j = entries[j].variable;
            pr.residual = render(residual);
            report.used_numeric_fallback = true;
            double mx = 0.0;
            if (sample_max_abs(pr.residual, vars, cfg, mx)) {
                pr.sampled = true;
                pr.max_deviation = mx;
                if (mx <= cfg.tolerance) continue; // numerically zero residual
            } else {
                pr.sampled = false;
                pr.max_deviation = -1.0;
            }
            report.failures.push_back(std::move(pr));
        }
    }
    report.exact = report.failures.empty();
    return report;
}

VerificationReport verify_solution(const DifferentialForm& f, const Expr& phi,
                                   const SamplingConfig& cfg) {
    constexpr int kPoints = 20;
    constexpr double kRelTol = 1e-6;
    VerificationReport report;
    report.pass = true;
    const auto vars = sampling_vars(f);
    for (const auto& entry : f.entries()) {
        VariableVerdict v;
        v.variable = entry.variable;
        Expr dphi = differentiate(phi, entry.variable);
        if (canonically_equal(dphi, entry.coefficient)) {
            v.pass = true;
            v.symbolic = true;
        } else {
            SplitMix64 rng(cfg.seed);
            try {
                double mx = 0.0;
                sample_valid_points(
                    vars, cfg.box, kPoints, std::min(kPoints, cfg.min_valid), rng,
                    [&](const Assignment& pt) {
                        const double want = eval_numeric(entry.coefficient, pt);
                        const double got = eval_numeric(dphi, pt);
                        const double scale = std::max(1.0, std::fabs(want));
                        mx = std::max(mx, std::fabs(got - want) / scale);
                    });
                v.max_rel_deviation = mx;
                v.pass = mx < kRelTol;
            } catch (const InsufficientSamplesError&) {
                v.pass = false;
                v.max_rel_deviation = -1.0;
            }
        }
        report.pass = report.pass && v.pass;
        report.per_variable.push_back(std::move(v));
    }
    return report;
}

namespace {

std::string not_exact_message(const ExactnessReport& r) {
    std::string msg = "form is not exact:";
    for (const auto& p : r.failures)
        msg += " d/d" + p.var_j + " vs d/d" + p.var_i + " residual " + format_expr(p.residual) + ";";
    return msg;
}

// Rule 1: one integral per entry, canonicalized
std::vector<TermSum> rule1_integrals(const DifferentialForm& f, OperationTally& tally) {
    std::vector<TermSum> integrals;
    integrals.reserve(f.size());
    for (const auto& entry : f.entries()) {
        integrals.push_back(canonicalize(integrate(entry.coefficient, entry.variable)));
        ++tally.integrations;
    }
    return integrals;
}

struct PooledTerm {
    CanonicalTerm term;
    int observed = 0;
};

// distinct canonical terms across all Rule 1 integrals, with counts,
// in deterministic (canonical) order
std::vector<PooledTerm> pool_terms(const std::vector<TermSum>& integrals) {
    std::vector<PooledTerm> pool;
    for (const auto& ts : integrals) {
        for (const auto& t : ts.terms()) {
            auto it = std::find_if(pool.begin(), pool.end(), [&](const PooledTerm& p) {
                return p.term.coefficient == t.coefficient &&
                       compare_structure(p.term, t) == 0;
            });
            if (it == pool.end())
                pool.push_back({t, 1});
            else
                ++it->observed;
        }
    }
    std::sort(pool.begin(), pool.end(), [](const PooledTerm& a, const PooledTerm& b) {
        if (int c = compare_structure(a.term, b.term)) return c < 0;
        return a.term.coefficient < b.term.coefficient;
    });
    return pool;
}

} // namespace

Solution solve_basic(const DifferentialForm& f, const SamplingConfig& cfg) {
    ExactnessReport exactness = check_exact(f, cfg);
    if (!exactness.exact) throw NotExactError(not_exact_message(exactness));

    Solution sol;
    sol.method = "basic";
    if (exactness.used_numeric_fallback)
        sol.warnings.push_back("exactness established with the numeric fallback");

    std::vector<PooledTerm> pool = pool_terms(rule1_integrals(f, sol.tally));

    // Rule 2: keep one representative per class. Exact canonical identity is
    // the grouping above; now merge representatives that differ only by an
    // additive constant (guarded fallback, normally a no-op).
    std::vector<CanonicalTerm> kept;
    for (const auto& p : pool) {
        Expr rendered = render(p.term);
        bool merged = false;
        for (const auto& k : kept) {
            Equivalence eq;
            try {
                eq = equivalence(rendered, render(k), cfg);
            } catch (const InsufficientSamplesError&) {
                eq = Equivalence::Different;
            }
            if (eq == Equivalence::DifferByConstant) {
                sol.warnings.push_back("terms " + format_expr(rendered) + " and " +
                                       format_expr(render(k)) +
                                       " differ by a constant; kept the latter");
                merged = true;
                break;
            }
        }
        if (!merged) kept.push_back(p.term);
    }

    TermSum phi;
    for (auto& t : kept) phi.add_term(std::move(t));
    sol.potential = render(phi);

    sol.verification = verify_solution(f, sol.potential, cfg);
    if (!sol.verification.pass)
        throw VerificationError(
            "basic method result " + format_expr(sol.potential) +
            " does not verify against the input form (term union failed to "
            "reconstruct a potential)");
    return sol;
}

Solution solve_standard(const DifferentialForm& f, const SamplingConfig& cfg) {
    ExactnessReport exactness = check_exact(f, cfg);
    if (!exactness.exact) throw NotExactError(not_exact_message(exactness));

    Solution sol;
    sol.method = "standard";
    if (exactness.used_numeric_fallback)
        sol.warnings.push_back("exactness established with the numeric fallback");

    const auto& entries = f.entries();
    TermSum phi = canonicalize(integrate(entries[0].coefficient, entries[0].variable));
    ++sol.tally.integrations;

    for (std::size_t i = 1; i < entries.size(); ++i) {
        Expr dphi = differentiate(render(phi), entries[i].variable);
        ++sol.tally.differentiations;
        TermSum residual =
            add(canonicalize(entries[i].coefficient), mul(canonicalize(dphi), TermSum(Rational(-1))));
        Expr residual_expr = render(residual);
        const auto rv = free_vars(residual_expr);
        for (std::size_t j = 0; j < i; ++j)
            if (rv.count(entries[j].variable))
                throw ResidualContaminationError(
                    "residual " + format_expr(residual_expr) + " for d" + entries[i].variable +
                    " still depends on " + entries[j].variable);
        phi = add(phi, canonicalize(integrate(residual_expr, entries[i].variable)));
        ++sol.tally.integrations;
    }

    sol.potential = render(phi);
    sol.verification = verify_solution(f, sol.potential, cfg);
    if (!sol.verification.pass)
        throw VerificationError("standard method result " + format_expr(sol.potential) +
                                " does not verify against the input form");
    return sol;
}

std::vector<MultiplicityEntry> term_multiplicity_diagnostic(const DifferentialForm& f) {
    OperationTally tally;
    std::vector<PooledTerm> pool = pool_terms(rule1_integrals(f, tally));

    std::set<std::string> form_vars;
    for (const auto& e : f.entries()) form_vars.insert(e.variable);

    std::vector<MultiplicityEntry> out;
    out.reserve(pool.size());
    for (const auto& p : pool) {
        MultiplicityEntry m;
        m.term = render(p.term);
        m.observed = p.observed;
        for (const auto& v : free_vars(m.term))
            if (form_vars.count(v)) ++m.expected;
        out.push_back(std::move(m));
    }
    return out;
}

long long cost_model_standard(int n) {
    if (n < 2) throw DomainError("cost model defined for n >= 2");
    return (static_cast<long long>(n) - 1) * (1LL << n) + 1;
}

} // namespace exactform
