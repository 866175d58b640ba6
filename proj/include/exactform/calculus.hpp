#pragma once

#include "exactform/errors.hpp"
#include "exactform/expr.hpp"

#include <string>

namespace exactform {

// Raised when a term falls outside the integration table. Means "outside
// this solver's class", not "has no antiderivative".
class NotIntegrableError : public Error {
public:
    NotIntegrableError(Expr term, std::string variable);
    const Expr& term() const { return term_; }
    const std::string& variable() const { return variable_; }

private:
    Expr term_;
    std::string variable_;
};

// Partial derivative, canonicalized. Total on all expressions.
Expr differentiate(const Expr& e, const std::string& v);

// Antiderivative with the integration constant set identically to zero.
// Table-driven per canonical term: the v-dependent part must be one of
//   v^q (rational q, q = -1 giving ln v), exp(a v), sin(a v), cos(a v),
//   ln(v), or v^m * {exp|sin|cos}(a v) with integer m >= 1 (by parts);
// v-free factors pass through multiplicatively. Each table entry has a
// fixed antiderivative representative, so repeated integrals of the same
// term always produce the same expression.
//
// Throws NotIntegrableError on the first term outside the table.
Expr integrate(const Expr& e, const std::string& v);

// True iff integrating the v-derivative of f (constant zero) gives back f.
bool is_basic_type_one(const Expr& f, const std::string& v);

// True iff is_basic_type_one(f, v) for every free variable v of f.
// Constants have no free variables and classify as not basic; their
// contribution to a solution is the standalone "+ C".
bool is_basic_type_two(const Expr& f);

} // namespace exactform
