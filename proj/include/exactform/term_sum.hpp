#pragma once

#include "exactform/expr.hpp"

#include <vector>

namespace exactform {

// One multiplicative factor of a canonical term: atom^exponent. Atoms are
// canonical expressions that are never Sum, Product, or plain Constant nodes.
struct CanonicalFactor {
    Expr atom;
    Rational exponent;
};

// coefficient * factor_1 * ... * factor_k with factors sorted by atom order
// and pairwise-distinct atoms. The coefficient is never zero.
struct CanonicalTerm {
    Rational coefficient;
    std::vector<CanonicalFactor> factors;
};

// Canonical sum-of-terms normal form: terms sorted by factor structure with
// no two terms sharing a structure, plus a standalone rational constant.
class TermSum {
public:
    TermSum() : constant_(0) {}
    explicit TermSum(Rational constant) : constant_(std::move(constant)) {}

    const std::vector<CanonicalTerm>& terms() const { return terms_; }
    const Rational& constant() const { return constant_; }

    bool is_zero() const { return terms_.empty() && constant_ == 0; }
    bool is_pure_constant() const { return terms_.empty(); }

    // Merges a term into the sum; like structures add coefficients and a
    // zero result removes the entry.
    void add_term(CanonicalTerm term);
    void add_constant(const Rational& c) { constant_ += c; }

private:
    std::vector<CanonicalTerm> terms_;
    Rational constant_;
};

int compare(const CanonicalFactor& a, const CanonicalFactor& b);
// Orders terms by factor structure only; the coefficient does not participate.
int compare_structure(const CanonicalTerm& a, const CanonicalTerm& b);

bool equal(const TermSum& a, const TermSum& b);

TermSum add(const TermSum& a, const TermSum& b);
TermSum mul(const TermSum& a, const TermSum& b);
TermSum pow(const TermSum& base, const Rational& exponent);

// Rewrites e into the canonical normal form: products distribute over sums,
// like terms merge, factors sort under the fixed atom order. Total on
// well-formed expressions and value-preserving on the common domain.
TermSum canonicalize(const Expr& e);

Expr render(const TermSum& t);
Expr render(const CanonicalTerm& t);

bool canonically_equal(const Expr& a, const Expr& b);
bool canonically_zero(const Expr& e);

} // namespace exactform
