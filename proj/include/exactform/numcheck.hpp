#pragma once

#include "exactform/form.hpp"
#include "exactform/sampling.hpp"

#include <string>
#include <vector>

namespace exactform {

struct GradientCheckReport {
    bool pass = false;
    int points = 0;
    double max_rel_deviation = 0.0;
    std::string worst_variable;
};

// Central finite differences of φ (h = 1e-5 * interval width per axis)
// against the form coefficients at sampled points; pass iff the maximum
// relative deviation stays below 1e-5. Entirely independent of the symbolic
// differentiation code.
GradientCheckReport gradient_check(const Expr& phi, const DifferentialForm& f,
                                   const DomainBox& box, int points,
                                   std::uint64_t seed = 0x9e3779b97f4a7c15ull);

// Line integral of the form along the axis-aligned staircase from base to
// target, one segment per variable in the given order. Adaptive Simpson
// quadrature to 1e-8 estimated error per segment. For exact forms the value
// is φ(target) − φ(base) regardless of order.
//
// Throws DomainError if a segment crosses a singularity, QuadratureError if
// the tolerance cannot be met.
double reconstruct_potential(const DifferentialForm& f, const Assignment& base,
                             const Assignment& target,
                             const std::vector<std::string>& order);

// Uses the form's own entry order.
double reconstruct_potential(const DifferentialForm& f, const Assignment& base,
                             const Assignment& target);

struct PathIndependenceReport {
    bool pass = false;
    double forward = 0.0;  // integral along form order
    double reversed = 0.0; // integral along reversed variable order
    double deviation = 0.0;
};

// Exactness witness: integrate along two different orders and compare
// within 1e-4 absolute.
PathIndependenceReport path_independence_check(const DifferentialForm& f,
                                               const Assignment& base,
                                               const Assignment& target);

} // namespace exactform
