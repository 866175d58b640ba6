#pragma once

#include "exactform/exact.hpp"
#include "exactform/form.hpp"
#include "exactform/sampling.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace exactform {

// Potentials are sums of distinct products of univariate atoms — each term a
// Basic Function of Type Two by construction. Atom pool per variable:
//   v^k (k in 1..4), sin(a v), cos(a v), exp(a v), ln(v)   with a in 1..3;
// coefficients p/q with p in ±1..5, q in 1..5.
struct GenConfig {
    std::uint64_t seed = 0;
    int num_vars = 2;  // 2..6
    int num_terms = 4; // 1..8
};

struct GeneratedPotential {
    Expr potential;
    std::vector<std::string> variables; // x, y, z, u, v, w
    DomainBox box;                      // valid sampling region
    std::vector<std::string> warnings;  // e.g. term count reduced after collisions
};

// Deterministic in cfg.seed: the same seed reproduces the same potential
// bit for bit on any platform (splitmix64 throughout).
GeneratedPotential generate_potential(const GenConfig& cfg);

// Entry i carries ∂φ/∂vars[i]; exact by construction.
// Requires vars to cover free_vars(phi).
DifferentialForm derive_form(const Expr& phi, const std::vector<std::string>& vars);

struct TrialReport {
    std::uint64_t seed = 0;
    int num_vars = 0;
    int num_terms = 0;
    bool ok = false;
    std::string error; // nonempty when a stage threw
    Equivalence basic_vs_phi = Equivalence::Different;
    Equivalence standard_vs_phi = Equivalence::Different;
    Equivalence basic_vs_standard = Equivalence::Different;
    OperationTally basic_tally;
    OperationTally standard_tally;
    std::vector<std::string> warnings;
};

// generate φ → derive form → solve with both methods → compare all three
// potentials. ok iff every comparison lands in {Equal, DifferByConstant}.
TrialReport round_trip(const GenConfig& cfg);

struct TallyStat {
    int num_vars = 0;
    int count = 0;
    double mean_standard_integrations = 0.0;
    double mean_standard_differentiations = 0.0;
};

struct TrialSummary {
    int trials = 0;
    int passes = 0;
    std::vector<TrialReport> reports; // all, in trial order
    std::vector<TallyStat> tally_stats;
};

// Trial i draws its seed as splitmix64(master_seed) output i, then its shape
// (num_vars in [vars_min, vars_max], num_terms in [1, 8]) and generator seed
// from that stream, so any trial can be replayed in isolation.
TrialSummary run_trials(std::uint64_t master_seed, int trials, int vars_min, int vars_max);

} // namespace exactform
