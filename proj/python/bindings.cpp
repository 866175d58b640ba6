#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "exactform/calculus.hpp"
#include "exactform/equivalence.hpp"
#include "exactform/exact.hpp"
#include "exactform/form.hpp"
#include "exactform/fuzz.hpp"
#include "exactform/numcheck.hpp"
#include "exactform/parser.hpp"
#include "exactform/report_json.hpp"
#include "exactform/term_sum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace exactform;
using nlohmann::json;

namespace {

// Reports cross the boundary as plain dicts/lists so Python callers can feed
// them straight into json.dumps or jsonschema.
py::object to_py(const json& j) {
    switch (j.type()) {
    case json::value_t::null:
        return py::none();
    case json::value_t::boolean:
        return py::bool_(j.get<bool>());
    case json::value_t::number_integer:
        return py::int_(j.get<long long>());
    case json::value_t::number_unsigned:
        return py::int_(j.get<unsigned long long>());
    case json::value_t::number_float:
        return py::float_(j.get<double>());
    case json::value_t::string:
        return py::str(j.get<std::string>());
    case json::value_t::array: {
        py::list out;
        for (const auto& item : j) out.append(to_py(item));
        return out;
    }
    case json::value_t::object: {
        py::dict out;
        for (const auto& [key, value] : j.items()) out[py::str(key)] = to_py(value);
        return out;
    }
    default:
        return py::none();
    }
}

py::dict solution_to_py(const Solution& s) {
    json j = s;
    auto d = py::cast<py::dict>(to_py(j));
    d["potential_expr"] = py::cast(s.potential);
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact differential equation solver (basic function method)";

    auto base = py::register_exception<Error>(m, "ExactformError");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<UnboundVariableError>(m, "UnboundVariableError", base.ptr());
    py::register_exception<InsufficientSamplesError>(m, "InsufficientSamplesError", base.ptr());
    py::register_exception<QuadratureError>(m, "QuadratureError", base.ptr());
    py::register_exception<DuplicateVariableError>(m, "DuplicateVariableError", base.ptr());
    py::register_exception<NotIntegrableError>(m, "NotIntegrableError", base.ptr());
    py::register_exception<NotExactError>(m, "NotExactError", base.ptr());
    py::register_exception<ResidualContaminationError>(m, "ResidualContaminationError",
                                                       base.ptr());
    py::register_exception<VerificationError>(m, "VerificationError", base.ptr());

    py::class_<Expr>(m, "Expr")
        .def("__str__", [](const Expr& e) { return format_expr(e); })
        .def("__repr__", [](const Expr& e) { return "Expr(\"" + format_expr(e) + "\")"; })
        .def("__eq__",
             [](const Expr& a, const Expr& b) { return structurally_equal(a, b); },
             py::is_operator())
        .def("free_vars", [](const Expr& e) { return free_vars(e); });

    py::class_<DifferentialForm>(m, "DifferentialForm")
        .def("__str__", [](const DifferentialForm& f) { return format_form(f); })
        .def("__repr__",
             [](const DifferentialForm& f) {
                 return "DifferentialForm(\"" + format_form(f) + "\")";
             })
        .def("variables", &DifferentialForm::variables)
        .def("entries", [](const DifferentialForm& f) {
            std::vector<std::pair<std::string, Expr>> out;
            for (const auto& e : f.entries()) out.emplace_back(e.variable, e.coefficient);
            return out;
        });

    m.def("parse_expression",
          [](const std::string& s) { return parse_expression(s); },
          py::arg("text"));
    m.def("parse_form",
          [](const std::string& s) { return parse_form(s); },
          py::arg("text"));
    m.def("format_expr", &format_expr, py::arg("expr"));
    m.def("format_form", &format_form, py::arg("form"));

    m.def("canonical",
          [](const Expr& e) { return render(canonicalize(e)); },
          py::arg("expr"),
          "Canonical normal form of the expression.");
    m.def("canonically_equal", &canonically_equal, py::arg("a"), py::arg("b"));
    m.def("equivalence",
          [](const Expr& a, const Expr& b, std::uint64_t seed) {
              SamplingConfig cfg;
              cfg.seed = seed;
              return std::string(name_of(equivalence(a, b, cfg)));
          },
          py::arg("a"), py::arg("b"), py::arg("seed") = SamplingConfig{}.seed,
          "'equal', 'differ_by_constant', or 'different'.");
    m.def("eval_numeric",
          [](const Expr& e, const Assignment& at) { return eval_numeric(e, at); },
          py::arg("expr"), py::arg("at"));

    m.def("differentiate", &differentiate, py::arg("expr"), py::arg("variable"));
    m.def("integrate", &integrate, py::arg("expr"), py::arg("variable"));
    m.def("is_basic_type_one", &is_basic_type_one, py::arg("expr"), py::arg("variable"));
    m.def("is_basic_type_two", &is_basic_type_two, py::arg("expr"));

    m.def("check_exact",
          [](const DifferentialForm& f) {
              json j = check_exact(f);
              return to_py(j);
          },
          py::arg("form"));
    m.def("solve_basic",
          [](const DifferentialForm& f) { return solution_to_py(solve_basic(f)); },
          py::arg("form"));
    m.def("solve_standard",
          [](const DifferentialForm& f) { return solution_to_py(solve_standard(f)); },
          py::arg("form"));
    m.def("verify_solution",
          [](const DifferentialForm& f, const Expr& phi) {
              json j = verify_solution(f, phi);
              return to_py(j);
          },
          py::arg("form"), py::arg("potential"));
    m.def("term_multiplicity_diagnostic",
          [](const DifferentialForm& f) {
              json j = term_multiplicity_diagnostic(f);
              return to_py(j);
          },
          py::arg("form"));
    m.def("cost_model_standard", &cost_model_standard, py::arg("num_vars"));

    m.def("generate_potential",
          [](std::uint64_t seed, int num_vars, int num_terms) {
              GenConfig cfg;
              cfg.seed = seed;
              cfg.num_vars = num_vars;
              cfg.num_terms = num_terms;
              GeneratedPotential g = generate_potential(cfg);
              py::dict d;
              d["potential"] = py::cast(g.potential);
              d["variables"] = py::cast(g.variables);
              d["warnings"] = py::cast(g.warnings);
              py::dict box;
              for (const auto& v : g.variables) {
                  Interval iv = g.box.interval(v);
                  box[py::str(v)] = py::make_tuple(iv.lo, iv.hi);
              }
              d["box"] = box;
              return d;
          },
          py::arg("seed"), py::arg("num_vars") = 2, py::arg("num_terms") = 4);
    m.def("derive_form", &derive_form, py::arg("potential"), py::arg("variables"));
    m.def("round_trip",
          [](std::uint64_t seed, int num_vars, int num_terms) {
              GenConfig cfg;
              cfg.seed = seed;
              cfg.num_vars = num_vars;
              cfg.num_terms = num_terms;
              json j = round_trip(cfg);
              return to_py(j);
          },
          py::arg("seed"), py::arg("num_vars") = 2, py::arg("num_terms") = 4);
    m.def("run_trials",
          [](std::uint64_t master_seed, int trials, int vars_min, int vars_max) {
              json j = run_trials(master_seed, trials, vars_min, vars_max);
              return to_py(j);
          },
          py::arg("master_seed"), py::arg("trials"), py::arg("vars_min") = 2,
          py::arg("vars_max") = 5);

    m.def("reconstruct_potential",
          [](const DifferentialForm& f, const Assignment& base_pt, const Assignment& target,
             std::optional<std::vector<std::string>> order) {
              return order ? reconstruct_potential(f, base_pt, target, *order)
                           : reconstruct_potential(f, base_pt, target);
          },
          py::arg("form"), py::arg("base"), py::arg("target"),
          py::arg("order") = py::none());
    m.def("path_independence_check",
          [](const DifferentialForm& f, const Assignment& base_pt, const Assignment& target) {
              json j = path_independence_check(f, base_pt, target);
              return to_py(j);
          },
          py::arg("form"), py::arg("base"), py::arg("target"));
    m.def("gradient_check",
          [](const Expr& phi, const DifferentialForm& f, int points, std::uint64_t seed) {
              json j = gradient_check(phi, f, DomainBox{}, points, seed);
              return to_py(j);
          },
          py::arg("potential"), py::arg("form"), py::arg("points") = 20,
          py::arg("seed") = 0x9e3779b97f4a7c15ull);

    m.attr("__version__") = "0.1.0";
}
