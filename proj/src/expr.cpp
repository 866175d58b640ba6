#include "exactform/expr.hpp"

#include "exactform/errors.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <utility>

namespace exactform {

struct Expr::Node {
    Kind kind;
    Rational value;             // Constant
    NamedValue named{};         // NamedConstant
    std::string name;           // Variable
    Func func{};                // Apply
    std::vector<Expr> children; // Sum/Product operands, Power {base, exponent}, Apply {argument}
};

Expr::Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expr Expr::make(Node&& n) { return Expr(std::make_shared<const Node>(std::move(n))); }

Expr::Expr() : Expr(constant(Rational(0))) {}

Expr Expr::constant(Rational value) {
    Node n;
    n.kind = Kind::Constant;
    n.value = std::move(value);
    return make(std::move(n));
}

Expr Expr::integer(long long value) { return constant(Rational(value)); }

Expr Expr::rational(long long num, long long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Integer n(num), d(den);
    if (d < 0) { n = -n; d = -d; } // cpp_rational wants den > 0
    return constant(Rational(n, d));
}

Expr Expr::named(NamedValue value) {
    Node n;
    n.kind = Kind::NamedConstant;
    n.named = value;
    return make(std::move(n));
}

Expr Expr::pi() { return named(NamedValue::Pi); }
Expr Expr::e() { return named(NamedValue::E); }

Expr Expr::variable(std::string name) {
    assert(!name.empty());
    Node n;
    n.kind = Kind::Variable;
    n.name = std::move(name);
    return make(std::move(n));
}

Expr Expr::sum(std::vector<Expr> operands) {
    std::vector<Expr> flat;
    Rational folded(0);
    for (auto& op : operands) {
        if (op.kind() == Kind::Sum) {
            for (const auto& inner : op.operands()) {
                if (inner.is_constant())
                    folded += inner.constant_value();
                else
                    flat.push_back(inner);
            }
        } else if (op.is_constant()) {
            folded += op.constant_value();
        } else {
            flat.push_back(std::move(op));
        }
    }
    if (folded != 0) flat.push_back(constant(folded));
    if (flat.empty()) return constant(Rational(0));
    if (flat.size() == 1) return flat.front();
    Node n;
    n.kind = Kind::Sum;
    n.children = std::move(flat);
    return make(std::move(n));
}

Expr Expr::product(std::vector<Expr> operands) {
    std::vector<Expr> flat;
    Rational folded(1);
    for (auto& op : operands) {
        if (op.kind() == Kind::Product) {
            for (const auto& inner : op.operands()) {
                if (inner.is_constant())
                    folded *= inner.constant_value();
                else
                    flat.push_back(inner);
            }
        } else if (op.is_constant()) {
            folded *= op.constant_value();
        } else {
            flat.push_back(std::move(op));
        }
    }
    if (folded == 0) return constant(Rational(0));
    if (folded != 1) flat.insert(flat.begin(), constant(folded));
    if (flat.empty()) return constant(Rational(1));
    if (flat.size() == 1) return flat.front();
    Node n;
    n.kind = Kind::Product;
    n.children = std::move(flat);
    return make(std::move(n));
}

Expr Expr::pow(Expr base, Expr exponent) {
    if (exponent.is_constant()) {
        const Rational& q = exponent.constant_value();
        if (q == 0) return constant(Rational(1)); // x^0 -> 1 (0^0 := 1)
        if (q == 1) return base;
        if (base.is_constant()) {
            const Rational& c = base.constant_value();
            if (c == 1) return constant(Rational(1));
            if (c == 0 && q > 0 && is_integer(q)) return constant(Rational(0));
            if (is_integer(q) && fits_int64(numerator(q))) {
                const auto e = numerator(q).template convert_to<std::int64_t>();
                if (std::llabs(e) <= kMaxFoldedExponent && (c != 0 || e > 0))
                    return constant(pow_rational(c, e));
            }
        }
        // (b^p)^q = b^(p*q) is an identity for integer q
        if (is_integer(q) && base.kind() == Kind::Power && base.exponent().is_constant())
            return pow(base.base(), constant(base.exponent().constant_value() * q));
    }
    if (base.kind() == Kind::NamedConstant && base.named_value() == NamedValue::E)
        return apply(Func::Exp, std::move(exponent));
    Node n;
    n.kind = Kind::Power;
    n.children.push_back(std::move(base));
    n.children.push_back(std::move(exponent));
    return make(std::move(n));
}

Expr Expr::apply(Func f, Expr argument) {
    if (f == Func::Sqrt) return pow(std::move(argument), rational(1, 2));
    if (argument.is_constant()) {
        const Rational& c = argument.constant_value();
        // fold only the exact special values
        if (c == 0) {
            switch (f) {
            case Func::Sin:
            case Func::Tan: return constant(Rational(0));
            case Func::Cos: return constant(Rational(1));
            case Func::Exp: return constant(Rational(1));
            default: break;
            }
        }
        if (c == 1 && f == Func::Ln) return constant(Rational(0));
    }
    Node n;
    n.kind = Kind::Apply;
    n.func = f;
    n.children.push_back(std::move(argument));
    return make(std::move(n));
}

Kind Expr::kind() const { return node_->kind; }

bool Expr::is_zero() const { return is_constant() && node_->value == 0; }
bool Expr::is_one() const { return is_constant() && node_->value == 1; }

const Rational& Expr::constant_value() const {
    assert(kind() == Kind::Constant);
    return node_->value;
}

NamedValue Expr::named_value() const {
    assert(kind() == Kind::NamedConstant);
    return node_->named;
}

const std::string& Expr::variable_name() const {
    assert(kind() == Kind::Variable);
    return node_->name;
}

const std::vector<Expr>& Expr::operands() const {
    assert(kind() == Kind::Sum || kind() == Kind::Product);
    return node_->children;
}

const Expr& Expr::base() const {
    assert(kind() == Kind::Power);
    return node_->children[0];
}

const Expr& Expr::exponent() const {
    assert(kind() == Kind::Power);
    return node_->children[1];
}

Func Expr::function() const {
    assert(kind() == Kind::Apply);
    return node_->func;
}

const Expr& Expr::argument() const {
    assert(kind() == Kind::Apply);
    return node_->children[0];
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::sum({a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::sum({a, -b}); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::product({a, b}); }
Expr operator/(const Expr& a, const Expr& b) {
    return Expr::product({a, Expr::pow(b, Expr::integer(-1))});
}
Expr Expr::operator-() const { return product({integer(-1), *this}); }

namespace {

int kind_rank(Kind k) {
    switch (k) {
    case Kind::Constant: return 0;
    case Kind::NamedConstant: return 1;
    case Kind::Variable: return 2;
    case Kind::Apply: return 3;
    case Kind::Power: return 4;
    case Kind::Sum: return 5;
    case Kind::Product: return 6;
    }
    return 7;
}

template <typename T>
int cmp3(const T& a, const T& b) {
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

} // namespace

int compare(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return 0;
    if (int c = cmp3(kind_rank(a.kind()), kind_rank(b.kind()))) return c;
    switch (a.kind()) {
    case Kind::Constant:
        return cmp3(a.constant_value(), b.constant_value());
    case Kind::NamedConstant:
        return cmp3(static_cast<int>(a.named_value()), static_cast<int>(b.named_value()));
    case Kind::Variable:
        return a.variable_name().compare(b.variable_name());
    case Kind::Apply:
        if (int c = cmp3(static_cast<int>(a.function()), static_cast<int>(b.function()))) return c;
        return compare(a.argument(), b.argument());
    case Kind::Power:
        if (int c = compare(a.base(), b.base())) return c;
        return compare(a.exponent(), b.exponent());
    case Kind::Sum:
    case Kind::Product: {
        const auto& xs = a.operands();
        const auto& ys = b.operands();
        const std::size_t n = std::min(xs.size(), ys.size());
        for (std::size_t i = 0; i < n; ++i)
            if (int c = compare(xs[i], ys[i])) return c;
        return cmp3(xs.size(), ys.size());
    }
    }
    return 0;
}

namespace {

void collect_vars(const Expr& e, std::set<std::string>& out) {
    switch (e.kind()) {
    case Kind::Constant:
    case Kind::NamedConstant:
        return;
    case Kind::Variable:
        out.insert(e.variable_name());
        return;
    case Kind::Apply:
        collect_vars(e.argument(), out);
        return;
    case Kind::Power:
        collect_vars(e.base(), out);
        collect_vars(e.exponent(), out);
        return;
    case Kind::Sum:
    case Kind::Product:
        for (const auto& op : e.operands()) collect_vars(op, out);
        return;
    }
}

double checked(double v) {
    if (!std::isfinite(v)) throw DomainError("evaluation produced a non-finite value");
    return v;
}

} // namespace

std::set<std::string> free_vars(const Expr& e) {
    std::set<std::string> out;
    collect_vars(e, out);
    return out;
}

double eval_numeric(const Expr& e, const Assignment& at) {
    switch (e.kind()) {
    case Kind::Constant:
        return to_double(e.constant_value());
    case Kind::NamedConstant:
        return e.named_value() == NamedValue::Pi ? std::numbers::pi_v<double>
                                                 : std::numbers::e_v<double>;
    case Kind::Variable: {
        auto it = at.find(e.variable_name());
        if (it == at.end()) throw UnboundVariableError(e.variable_name());
        return it->second;
    }
    case Kind::Sum: {
        double acc = 0;
        for (const auto& op : e.operands()) acc += eval_numeric(op, at);
        return checked(acc);
    }
    case Kind::Product: {
        double acc = 1;
        for (const auto& op : e.operands()) acc *= eval_numeric(op, at);
        return checked(acc);
    }
    case Kind::Power: {
        const double b = eval_numeric(e.base(), at);
        const double x = eval_numeric(e.exponent(), at);
        if (x == 0) return 1.0;
        if (b == 0) {
            if (x < 0) throw DomainError("division by zero");
            return 0.0;
        }
        if (b < 0 && std::nearbyint(x) != x)
            throw DomainError("fractional power of a negative base");
        return checked(std::pow(b, x));
    }
    case Kind::Apply: {
        const double u = eval_numeric(e.argument(), at);
        switch (e.function()) {
        case Func::Sin: return checked(std::sin(u));
        case Func::Cos: return checked(std::cos(u));
        case Func::Tan: return checked(std::tan(u));
        case Func::Exp: return checked(std::exp(u));
        case Func::Ln:
            if (u <= 0) throw DomainError("ln of a nonpositive value");
            return checked(std::log(u));
        case Func::Sqrt:
            if (u < 0) throw DomainError("square root of a negative value");
            return checked(std::sqrt(u));
        }
        break;
    }
    }
    throw Error("eval_numeric: unreachable node kind");
}

const char* name_of(Func f) {
    switch (f) {
    case Func::Sin: return "sin";
    case Func::Cos: return "cos";
    case Func::Tan: return "tan";
    case Func::Exp: return "exp";
    case Func::Ln: return "ln";
    case Func::Sqrt: return "sqrt";
    }
    return "?";
}

const char* name_of(NamedValue c) { return c == NamedValue::Pi ? "pi" : "e"; }

} // namespace exactform
