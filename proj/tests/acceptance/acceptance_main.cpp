// Acceptance gate: one line per criterion, exit 0 iff every criterion holds.
// Each criterion states its own tolerance; timings are wall-clock.

#include "exactform/calculus.hpp"
#include "exactform/equivalence.hpp"
#include "exactform/exact.hpp"
#include "exactform/fuzz.hpp"
#include "exactform/numcheck.hpp"
#include "exactform/parser.hpp"
#include "exactform/term_sum.hpp"

#include "support/generators.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

using namespace exactform;

namespace {

const char* kGoldenForm =
    "(e^x*sin(y)*cos(z) - 2*y*sin(x)*e^z) dx"
    " + (e^x*cos(y)*cos(z) + 2*cos(x)*e^z + 1/(y*z)) dy"
    " + (2*y*cos(x)*e^z - e^x*sin(y)*sin(z) - ln(y)/z^2) dz = 0";

const char* kGoldenPotential = "e^x*sin(y)*cos(z) + 2*y*cos(x)*e^z + ln(y)/z";

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool criterion_golden(std::string& detail) {
    auto t0 = std::chrono::steady_clock::now();
    DifferentialForm f = parse_form(kGoldenForm);
    Expr want = parse_expression(kGoldenPotential);
    Solution basic = solve_basic(f);
    Solution standard = solve_standard(f);
    const double dt = seconds_since(t0);
    bool ok = canonically_equal(basic.potential, want) &&
              canonically_equal(standard.potential, want) &&
              equivalence(basic.potential, standard.potential) == Equivalence::Equal &&
              dt < 1.0;
    std::ostringstream os;
    os << "both methods, verdict "
       << name_of(equivalence(basic.potential, standard.potential)) << ", " << dt << " s";
    detail = os.str();
    return ok;
}

bool criterion_classification(std::string& detail) {
    Expr f = parse_expression("sin(x)*cos(y) + sin(y)");
    bool ok = !is_basic_type_one(f, "x") && is_basic_type_one(f, "y") &&
              is_basic_type_two(parse_expression("sin(x)*cos(y)"));
    detail = "exact boolean match on the three fixtures";
    return ok;
}

bool criterion_tallies(const TrialSummary& s, std::string& detail) {
    int checked = 0;
    for (const auto& r : s.reports) {
        if (!r.ok) continue;
        if (r.basic_tally.integrations != r.num_vars ||
            r.basic_tally.differentiations != 0) {
            std::ostringstream os;
            os << "trial seed " << r.seed << " tallied ("
               << r.basic_tally.integrations << ", "
               << r.basic_tally.differentiations << ") on n=" << r.num_vars;
            detail = os.str();
            return false;
        }
        ++checked;
    }
    bool model = cost_model_standard(2) == 5 && cost_model_standard(3) == 17 &&
                 cost_model_standard(4) == 49 && cost_model_standard(5) == 129;
    std::ostringstream os;
    os << checked << " solves at (n, 0); cost model 5/17/49/129 "
       << (model ? "exact" : "WRONG");
    detail = os.str();
    return model && checked == s.trials;
}

bool criterion_round_trip(const TrialSummary& s, double elapsed, std::string& detail) {
    int good = 0;
    for (const auto& r : s.reports)
        if (r.ok && (r.basic_vs_phi == Equivalence::Equal ||
                     r.basic_vs_phi == Equivalence::DifferByConstant))
            ++good;
    std::ostringstream os;
    os << good << "/" << s.trials << " trials recovered the potential, " << elapsed
       << " s";
    detail = os.str();
    return good == s.trials && elapsed < 60.0;
}

bool criterion_calculus_identities(std::string& detail) {
    SplitMix64 rng(0xACCE97);
    const auto& vars = testgen::var_pool();
    int fd_points = 0;
    for (int i = 0; i < 1000; ++i) {
        const std::string v = vars[rng.next_below(vars.size())];
        Expr e = testgen::integrable_expr(rng, v);
        Expr F = integrate(e, v);
        if (!canonically_equal(differentiate(F, v), e)) {
            detail = "fundamental pair failed for " + format_expr(e) + " in " + v;
            return false;
        }
        auto fv = free_vars(e);
        fv.insert(v);
        std::vector<std::string> vlist(fv.begin(), fv.end());
        int good = 0;
        for (int tries = 0; tries < 400 && good < 20; ++tries) {
            Assignment at = testgen::random_point(rng, vlist, 0.6, 1.9);
            double fd, sym;
            try {
                fd = testgen::central_diff(F, at, v, 1e-5);
                sym = eval_numeric(e, at);
            } catch (const DomainError&) {
                continue;
            }
            if (std::abs(fd - sym) >
                1e-5 * std::max({1.0, std::abs(fd), std::abs(sym)})) {
                detail = "finite differences disagree for " + format_expr(e) + " in " + v;
                return false;
            }
            ++good;
        }
        if (good < 20) {
            detail = "could not sample 20 valid points for " + format_expr(e);
            return false;
        }
        fd_points += good;
    }
    std::ostringstream os;
    os << "1000 integrable expressions, " << fd_points << " finite-difference points";
    detail = os.str();
    return true;
}

bool criterion_numeric_oracle(std::string& detail) {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        GenConfig cfg;
        cfg.seed = seed;
        cfg.num_vars = 2 + static_cast<int>(seed % 4);
        cfg.num_terms = 1 + static_cast<int>(seed % 5);
        GeneratedPotential g = generate_potential(cfg);
        DifferentialForm f = derive_form(g.potential, g.variables);
        SplitMix64 rng(seed * 7919);
        Assignment base, target;
        for (const auto& v : g.variables) {
            Interval iv = g.box.interval(v);
            base[v] = rng.next_double(iv.lo, iv.hi);
            target[v] = rng.next_double(iv.lo, iv.hi);
        }
        double want = eval_numeric(g.potential, target) - eval_numeric(g.potential, base);
        double got = reconstruct_potential(f, base, target);
        if (std::abs(got - want) >= 1e-4) {
            std::ostringstream os;
            os << "seed " << seed << ": line integral " << got << " vs potential delta "
               << want;
            detail = os.str();
            return false;
        }
        if (!path_independence_check(f, base, target).pass) {
            detail = "path independence failed for seed " + std::to_string(seed);
            return false;
        }
    }
    PathIndependenceReport witness = path_independence_check(
        parse_form("y dx - x dy"), {{"x", 1.0}, {"y", 1.0}}, {{"x", 2.0}, {"y", 2.0}});
    if (witness.pass) {
        detail = "non-exact witness y dx - x dy passed path independence";
        return false;
    }
    detail = "50 reconstructions within 1e-4; witness fails as it must";
    return true;
}

bool criterion_parser_round_trip(std::string& detail) {
    SplitMix64 rng(0x9A25E);
    for (int i = 0; i < 1000; ++i) {
        Expr e = testgen::arbitrary_expr(rng, 3);
        Expr back = parse_expression(format_expr(e));
        if (!canonically_equal(back, e)) {
            detail = "expression round trip failed: " + format_expr(e);
            return false;
        }
    }
    for (int i = 0; i < 200; ++i) {
        DifferentialForm f = testgen::arbitrary_form(rng);
        DifferentialForm back = parse_form(format_form(f));
        if (back.variables() != f.variables()) {
            detail = "form round trip changed the variables: " + format_form(f);
            return false;
        }
        for (std::size_t k = 0; k < f.size(); ++k)
            if (!canonically_equal(back.entries()[k].coefficient,
                                   f.entries()[k].coefficient)) {
                detail = "form round trip changed entry " + std::to_string(k) + ": " +
                         format_form(f);
                return false;
            }
    }
    const std::vector<std::string> malformed = {"sin(x", "2x", "y dx + ("};
    for (const auto& input : malformed) {
        bool positioned = false;
        try {
            if (input.find("dx") != std::string::npos)
                parse_form(input);
            else
                parse_expression(input);
        } catch (const ParseError& e) {
            positioned = e.span().offset <= input.size();
        }
        if (!positioned) {
            detail = "no positioned error for \"" + input + "\"";
            return false;
        }
    }
    detail = "1000 expressions + 200 forms canonical identity; 3 positioned errors";
    return true;
}

bool criterion_exactness(std::string& detail) {
    for (std::uint64_t seed = 200; seed < 250; ++seed) {
        GenConfig cfg;
        cfg.seed = seed;
        cfg.num_vars = 2 + static_cast<int>(seed % 5);
        cfg.num_terms = 1 + static_cast<int>(seed % 6);
        GeneratedPotential g = generate_potential(cfg);
        DifferentialForm f = derive_form(g.potential, g.variables);
        if (!check_exact(f).exact) {
            detail = "derived form rejected for seed " + std::to_string(seed);
            return false;
        }
    }
    ExactnessReport bad = check_exact(parse_form("y dx - x dy"));
    bool witness = !bad.exact && bad.failures.size() == 1 &&
                   canonically_equal(bad.failures[0].residual, Expr::integer(2));
    ExactnessReport golden = check_exact(parse_form(kGoldenForm));
    bool symbolic = golden.exact && !golden.used_numeric_fallback;
    if (!witness) {
        detail = "y dx - x dy did not report residual 2";
        return false;
    }
    if (!symbolic) {
        detail = "golden form was not accepted symbolically";
        return false;
    }
    detail = "50 derived forms accepted; witness rejected with residual 2; golden symbolic";
    return true;
}

} // namespace

int main() {
    int passed = 0;
    int total = 0;
    auto report = [&](const char* name, bool ok, const std::string& detail) {
        ++total;
        if (ok) ++passed;
        std::printf("[%s] %d. %s — %s\n", ok ? "PASS" : "FAIL", total, name,
                    detail.c_str());
    };

    std::string detail;

    report("golden worked example (both methods, < 1 s)", criterion_golden(detail), detail);
    report("classification fixtures", criterion_classification(detail), detail);

    auto t0 = std::chrono::steady_clock::now();
    TrialSummary summary = run_trials(0xF00D, 500, 2, 5);
    const double fuzz_elapsed = seconds_since(t0);

    report("operation counts over 500 trials", criterion_tallies(summary, detail), detail);
    report("round-trip property suite (500 trials, < 60 s)",
           criterion_round_trip(summary, fuzz_elapsed, detail), detail);
    report("calculus identities (1000 cases, FD 1e-5)",
           criterion_calculus_identities(detail), detail);
    report("numeric oracle (50 reconstructions, 1e-4)", criterion_numeric_oracle(detail),
           detail);
    report("parser round trip (1000 + 200, 3 positioned errors)",
           criterion_parser_round_trip(detail), detail);
    report("exactness checking", criterion_exactness(detail), detail);

    std::printf("acceptance: %d/%d criteria passed\n", passed, total);
    return passed == total ? 0 : 1;
}
