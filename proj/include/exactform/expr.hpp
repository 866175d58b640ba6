#pragma once

#include "exactform/errors.hpp"
#include "exactform/rational.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace exactform {

enum class Kind { Constant, NamedConstant, Variable, Apply, Power, Sum, Product };

enum class Func { Sin, Cos, Tan, Exp, Ln, Sqrt };

enum class NamedValue { Pi, E };

const char* name_of(Func f);
const char* name_of(NamedValue c);

// Immutable symbolic expression tree.
//
// The factory functions maintain the structural invariants: nested sums and
// products are flattened, single-operand wrappers collapse, literal constants
// fold (including integer powers of rationals), and rationals are stored in
// lowest terms. Two representation choices are normalized away at
// construction time: e^u becomes exp(u) and sqrt(u) becomes u^(1/2), so the
// rest of the library sees one spelling of each.
class Expr {
public:
    Expr(); // constant zero

    static Expr constant(Rational value);
    static Expr integer(long long value);
    static Expr rational(long long num, long long den);
    static Expr named(NamedValue value);
    static Expr pi();
    static Expr e();
    static Expr variable(std::string name);
    static Expr sum(std::vector<Expr> operands);
    static Expr product(std::vector<Expr> operands);
    static Expr pow(Expr base, Expr exponent);
    static Expr apply(Func f, Expr argument);

    static Expr sin(Expr argument) { return apply(Func::Sin, std::move(argument)); }
    static Expr cos(Expr argument) { return apply(Func::Cos, std::move(argument)); }
    static Expr tan(Expr argument) { return apply(Func::Tan, std::move(argument)); }
    static Expr exp(Expr argument) { return apply(Func::Exp, std::move(argument)); }
    static Expr ln(Expr argument) { return apply(Func::Ln, std::move(argument)); }
    static Expr sqrt(Expr argument) { return apply(Func::Sqrt, std::move(argument)); }

    Kind kind() const;

    bool is_constant() const { return kind() == Kind::Constant; }
    bool is_zero() const;
    bool is_one() const;

    // Accessors; each requires the matching kind.
    const Rational& constant_value() const;        // Constant
    NamedValue named_value() const;                // NamedConstant
    const std::string& variable_name() const;      // Variable
    const std::vector<Expr>& operands() const;     // Sum / Product
    const Expr& base() const;                      // Power
    const Expr& exponent() const;                  // Power
    Func function() const;                         // Apply
    const Expr& argument() const;                  // Apply

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator/(const Expr& a, const Expr& b);
    Expr operator-() const;

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node);
    static Expr make(Node&& n);
    std::shared_ptr<const Node> node_;

    friend int compare(const Expr& a, const Expr& b);
};

// Total structural order on expressions: by node kind rank, then by the
// kind-specific payload, recursing over operands. Returns <0, 0, >0.
int compare(const Expr& a, const Expr& b);

inline bool structurally_equal(const Expr& a, const Expr& b) { return compare(a, b) == 0; }

std::set<std::string> free_vars(const Expr& e);

using Assignment = std::map<std::string, double>;

// IEEE double evaluation. Throws UnboundVariableError for a variable missing
// from `at`, DomainError when evaluation leaves the real domain.
double eval_numeric(const Expr& e, const Assignment& at);

} // namespace exactform
