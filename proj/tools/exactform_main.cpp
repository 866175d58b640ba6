#include "exactform/exact.hpp"
#include "exactform/fuzz.hpp"
#include "exactform/parser.hpp"
#include "exactform/report_json.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using nlohmann::json;
using namespace exactform;

// exit code contract:
//   0 success, 1 usage or parse error, 2 not exact,
//   3 not integrable / verification failure, 4 fuzz trial failure
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNotExact = 2;
constexpr int kExitUnsolvable = 3;
constexpr int kExitFuzzFailure = 4;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void print_parse_error(const std::string& input, const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "  " << input << "\n";
    std::cerr << "  " << std::string(e.span().offset, ' ') << "^\n";
}

std::string load_input(const std::string& inline_form, const std::string& path) {
    if (!inline_form.empty() && !path.empty())
        throw CLI::ValidationError("give the form inline or with --file, not both");
    if (inline_form.empty() && path.empty())
        throw CLI::ValidationError("no input form; pass it inline or with --file");
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw CLI::ValidationError("cannot read " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        std::string s = ss.str();
        while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
        return s;
    }
    return inline_form;
}

std::pair<int, int> parse_vars_range(const std::string& range) {
    const auto dots = range.find("..");
    int lo, hi;
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(range);
        } else {
            lo = std::stoi(range.substr(0, dots));
            hi = std::stoi(range.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("--vars wants N or MIN..MAX, e.g. 2..5");
    }
    if (lo < 2 || hi > 6 || lo > hi)
        throw CLI::ValidationError("--vars range must lie within 2..6");
    return {lo, hi};
}

int cmd_check(const std::string& input, bool json_out) {
    DifferentialForm form = parse_form(input);
    ExactnessReport report = check_exact(form);
    if (json_out) {
        emit(json{{"schema", 1},
                  {"subcommand", "check"},
                  {"input", input},
                  {"form", format_form(form)},
                  {"report", report}});
    } else {
        std::cout << "form: " << format_form(form) << "\n";
        if (report.exact) {
            std::cout << "exact"
                      << (report.used_numeric_fallback ? " (numeric fallback)" : " (symbolic)")
                      << "\n";
        } else {
            std::cout << "not exact\n";
            for (const auto& p : report.failures)
                std::cout << "  dM_" << p.var_i << "/d" << p.var_j << " - dM_" << p.var_j
                          << "/d" << p.var_i << " = " << format_expr(p.residual)
                          << " (max deviation " << p.max_deviation << ")\n";
        }
    }
    return report.exact ? kExitOk : kExitNotExact;
}

void print_solution(const Solution& s) {
    std::cout << "method: " << s.method << "\n";
    std::cout << "potential (solution is potential = C): " << format_expr(s.potential) << "\n";
    std::cout << "integrations: " << s.tally.integrations
              << "  differentiations: " << s.tally.differentiations << "\n";
    bool symbolic = true;
    for (const auto& v : s.verification.per_variable) symbolic = symbolic && v.symbolic;
    std::cout << "verification: " << (s.verification.pass ? "pass" : "fail")
              << (symbolic ? " (symbolic)" : " (numeric)") << "\n";
    for (const auto& w : s.warnings) std::cout << "warning: " << w << "\n";
}

int cmd_solve(const std::string& input, const std::string& method, bool json_out) {
    DifferentialForm form = parse_form(input);
    std::optional<Solution> basic, standard;
    if (method == "basic" || method == "both") basic = solve_basic(form);
    if (method == "standard" || method == "both") standard = solve_standard(form);

    std::optional<Equivalence> verdict;
    if (basic && standard) verdict = equivalence(basic->potential, standard->potential);

    if (json_out) {
        json solutions = json::array();
        if (basic) solutions.push_back(*basic);
        if (standard) solutions.push_back(*standard);
        json j{{"schema", 1},
               {"subcommand", "solve"},
               {"input", input},
               {"form", format_form(form)},
               {"method", method},
               {"solutions", solutions}};
        if (verdict) j["equivalence"] = name_of(*verdict);
        emit(j);
    } else {
        std::cout << "form: " << format_form(form) << "\n";
        if (basic) print_solution(*basic);
        if (basic && standard) std::cout << "\n";
        if (standard) print_solution(*standard);
        if (verdict) std::cout << "equivalence: " << name_of(*verdict) << "\n";
    }
    return kExitOk;
}

int cmd_fuzz(std::uint64_t seed, int trials, const std::string& vars) {
    const auto [lo, hi] = parse_vars_range(vars);
    TrialSummary summary = run_trials(seed, trials, lo, hi);
    emit(json{{"schema", 1},
              {"subcommand", "fuzz"},
              {"seed", seed},
              {"trials", trials},
              {"vars_min", lo},
              {"vars_max", hi},
              {"summary", summary}});
    return summary.passes == summary.trials ? kExitOk : kExitFuzzFailure;
}

int cmd_bench(const std::string& vars, int trials_per_n, std::uint64_t seed, bool json_out) {
    const auto [lo, hi] = parse_vars_range(vars);
    json rows = json::array();
    for (int n = lo; n <= hi; ++n) {
        TrialSummary s = run_trials(seed + static_cast<std::uint64_t>(n), trials_per_n, n, n);
        double mean_ops = 0.0;
        if (!s.tally_stats.empty())
            mean_ops = s.tally_stats[0].mean_standard_integrations +
                       s.tally_stats[0].mean_standard_differentiations;
        rows.push_back(json{{"num_vars", n},
                            {"standard_model", cost_model_standard(n)},
                            {"standard_empirical_mean_ops", mean_ops},
                            {"basic_integrations", n},
                            {"trials", trials_per_n},
                            {"passes", s.passes}});
    }
    if (json_out) {
        emit(json{{"schema", 1}, {"subcommand", "bench"}, {"rows", rows}});
    } else {
        std::cout << "  n  standard(model)  standard(empirical ops)  basic(integrations)\n";
        for (const auto& r : rows) {
            std::printf("%3d  %15lld  %23.1f  %19d\n", r["num_vars"].get<int>(),
                        r["standard_model"].get<long long>(),
                        r["standard_empirical_mean_ops"].get<double>(),
                        r["num_vars"].get<int>());
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact differential equation solver (basic function method)"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "emit JSON reports");

    std::string check_form, check_file;
    auto* check = app.add_subcommand("check", "test a form for exactness");
    check->add_option("form", check_form, "differential form, e.g. \"y dx + x dy = 0\"");
    check->add_option("--file", check_file, "read the form from a file");

    std::string solve_form, solve_file, method = "both";
    auto* solve = app.add_subcommand("solve", "solve an exact equation");
    solve->add_option("form", solve_form, "differential form");
    solve->add_option("--file", solve_file, "read the form from a file");
    solve->add_option("--method", method, "basic | standard | both")
        ->check(CLI::IsMember({"basic", "standard", "both"}));

    std::uint64_t fuzz_seed = 1;
    int fuzz_trials = 100;
    std::string fuzz_vars = "2..5";
    auto* fuzz = app.add_subcommand("fuzz", "round-trip differential testing");
    fuzz->add_option("--seed", fuzz_seed, "master seed");
    fuzz->add_option("--trials", fuzz_trials, "number of trials")
        ->check(CLI::Range(1, 1000000));
    fuzz->add_option("--vars", fuzz_vars, "variable count range MIN..MAX (within 2..6)");

    std::string bench_vars = "2..5";
    int bench_trials = 20;
    std::uint64_t bench_seed = 1;
    auto* bench = app.add_subcommand("bench", "operation counts per method");
    bench->add_option("--vars", bench_vars, "variable count range MIN..MAX (within 2..6)");
    bench->add_option("--trials", bench_trials, "fuzz instances per variable count")
        ->check(CLI::Range(1, 1000000));
    bench->add_option("--seed", bench_seed, "master seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage; // 0 covers --help
    }

    std::string input;
    try {
        if (check->parsed()) {
            input = load_input(check_form, check_file);
            return cmd_check(input, json_out);
        }
        if (solve->parsed()) {
            input = load_input(solve_form, solve_file);
            return cmd_solve(input, method, json_out);
        }
        if (fuzz->parsed()) return cmd_fuzz(fuzz_seed, fuzz_trials, fuzz_vars);
        if (bench->parsed()) return cmd_bench(bench_vars, bench_trials, bench_seed, json_out);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        print_parse_error(input, e);
        return kExitUsage;
    } catch (const DuplicateVariableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NotExactError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotExact;
    } catch (const NotIntegrableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsolvable;
    } catch (const ResidualContaminationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsolvable;
    } catch (const VerificationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsolvable;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
