#pragma once

#include "exactform/calculus.hpp"
#include "exactform/equivalence.hpp"
#include "exactform/form.hpp"
#include "exactform/sampling.hpp"

#include <string>
#include <vector>

namespace exactform {

class NotExactError : public Error {
public:
    using Error::Error;
};

// Standard solver found an already-processed variable inside a residual:
// the input is not exact or left the integrable class.
class ResidualContaminationError : public Error {
public:
    using Error::Error;
};

// A solver result failed verification against the input form. The basic
// method can hit this when the term union fails to reconstruct a potential
// (the input violates the method's decomposition assumption).
class VerificationError : public Error {
public:
    using Error::Error;
};

struct PairResidual {
    std::string var_i;
    std::string var_j;
    Expr residual; // canonicalized ∂M_i/∂x_j − ∂M_j/∂x_i
    bool sampled = false;
    double max_deviation = 0.0;
};

struct ExactnessReport {
    bool exact = false;
    // true when at least one residual pair needed the numeric fallback to
    // reach its verdict; such verdicts are probabilistic
    bool used_numeric_fallback = false;
    std::vector<PairResidual> failures;
};

// Pairwise mixed-partial test. A symbolically nonzero residual gets a numeric
// second chance: if it samples to zero (|residual| <= cfg.tolerance at every
// valid point) the pair passes with used_numeric_fallback set.
ExactnessReport check_exact(const DifferentialForm& f, const SamplingConfig& cfg = {});

struct OperationTally {
    int integrations = 0;
    int differentiations = 0;
};

struct VariableVerdict {
    std::string variable;
    bool pass = false;
    bool symbolic = false;       // verdict reached without sampling
    double max_rel_deviation = 0.0; // -1 when sampling was impossible
};

struct VerificationReport {
    bool pass = false;
    std::vector<VariableVerdict> per_variable;
};

// Checks ∂φ/∂x_i = M_i for every entry: symbolically first, then at 20
// sample points within 1e-6 relative deviation.
VerificationReport verify_solution(const DifferentialForm& f, const Expr& phi,
                                   const SamplingConfig& cfg = {});

struct Solution {
    Expr potential; // φ; the solution set is φ = C
    std::string method;
    OperationTally tally;
    VerificationReport verification;
    std::vector<std::string> warnings;
};

// Rule 1 + Rule 2: integrate every coefficient with respect to its own
// variable (exactly n integrations), pool the resulting canonical terms, and
// keep one representative per equivalence class. Classes are formed by exact
// canonical identity; classes whose representatives differ by an additive
// constant (sampled) are then merged with a warning. Verifies before
// returning.
Solution solve_basic(const DifferentialForm& f, const SamplingConfig& cfg = {});

// Textbook method: φ = ∫M_1 dx_1;  then for each further variable integrate
// the residual M_i − ∂φ/∂x_i, which must be free of all processed variables.
Solution solve_standard(const DifferentialForm& f, const SamplingConfig& cfg = {});

struct MultiplicityEntry {
    Expr term;
    int observed = 0;
    int expected = 0; // = number of form variables the term depends on
};

// How often each pooled term shows up across the per-variable integrals of
// Rule 1, against the predicted multiplicity. Mismatches are diagnostics,
// not errors.
std::vector<MultiplicityEntry> term_multiplicity_diagnostic(const DifferentialForm& f);

// (n-1)*2^n + 1 symbolic operations for the standard method on n variables.
// Throws DomainError for n < 2.
long long cost_model_standard(int n);

} // namespace exactform
