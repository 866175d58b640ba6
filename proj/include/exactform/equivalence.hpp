#pragma once

#include "exactform/expr.hpp"
#include "exactform/sampling.hpp"
#include "exactform/term_sum.hpp"

namespace exactform {

enum class Equivalence { Equal, DifferByConstant, Different };

const char* name_of(Equivalence v);

// Equal when the canonical forms match. Otherwise samples a - b over the
// config box: a difference that is the same (within the relative tolerance)
// at every valid point is DifferByConstant, anything else is Different.
// The numeric verdicts are probabilistic; callers that surface them in
// reports flag them as such.
//
// Throws InsufficientSamplesError when fewer than cfg.min_valid sample
// points avoid domain errors.
Equivalence equivalence(const Expr& a, const Expr& b, const SamplingConfig& cfg = {});

} // namespace exactform
