#include "exactform/calculus.hpp"

#include "exactform/parser.hpp"
#include "exactform/term_sum.hpp"

#include <optional>

namespace exactform {

NotIntegrableError::NotIntegrableError(Expr term, std::string variable)
    : Error("cannot integrate " + format_expr(term) + " with respect to " + variable +
            " (outside the integration table)"),
      term_(std::move(term)), variable_(std::move(variable)) {}

namespace {

Expr d(const Expr& e, const std::string& v) {
    switch (e.kind()) {
    case Kind::Constant:
    case Kind::NamedConstant:
        return Expr::integer(0);
    case Kind::Variable:
        return Expr::integer(e.variable_name() == v ? 1 : 0);
    case Kind::Sum: {
        std::vector<Expr> parts;
        for (const auto& op : e.operands()) parts.push_back(d(op, v));
        return Expr::sum(std::move(parts));
    }
    case Kind::Product: {
        const auto& ops = e.operands();
        std::vector<Expr> parts;
        for (std::size_t i = 0; i < ops.size(); ++i) {
            std::vector<Expr> factors;
            for (std::size_t j = 0; j < ops.size(); ++j)
                factors.push_back(i == j ? d(ops[j], v) : ops[j]);
            parts.push_back(Expr::product(std::move(factors)));
        }
        return Expr::sum(std::move(parts));
    }
    case Kind::Power: {
        const Expr& b = e.base();
        const Expr& u = e.exponent();
        // b^u * u' * ln(b)  +  u * b^(u-1) * b'
        Expr lnpart = d(u, v) * Expr::ln(b) * e;
        Expr powpart = u * Expr::pow(b, u - Expr::integer(1)) * d(b, v);
        return lnpart + powpart;
    }
    case Kind::Apply: {
        const Expr& g = e.argument();
        Expr outer;
        switch (e.function()) {
        case Func::Sin: outer = Expr::cos(g); break;
        case Func::Cos: outer = -Expr::sin(g); break;
        case Func::Tan: outer = Expr::pow(Expr::cos(g), Expr::integer(-2)); break;
        case Func::Exp: outer = e; break;
        case Func::Ln: outer = Expr::pow(g, Expr::integer(-1)); break;
        case Func::Sqrt: // construction rewrites sqrt to ^(1/2); kept for safety
            outer = Expr::rational(1, 2) * Expr::pow(g, Expr::rational(-1, 2));
            break;
        }
        return outer * d(g, v);
    }
    }
    return Expr::integer(0);
}

// a when arg is exactly a*v for rational a != 0
std::optional<Rational> linear_coefficient(const Expr& arg, const std::string& v) {
    TermSum ts = canonicalize(arg);
    if (ts.constant() != 0 || ts.terms().size() != 1) return std::nullopt;
    const CanonicalTerm& t = ts.terms().front();
    if (t.factors.size() != 1 || t.factors[0].exponent != 1) return std::nullopt;
    const Expr& atom = t.factors[0].atom;
    if (atom.kind() != Kind::Variable || atom.variable_name() != v) return std::nullopt;
    return t.coefficient;
}

// ∫ v^m f(a v) dv for f in {exp, sin, cos}, integer m >= 0, by parts.
Expr by_parts(int m, Func f, const Rational& a, const Expr& av, const Expr& var) {
    Expr inv_a = Expr::constant(Rational(1) / a);
    if (m == 0) {
        switch (f) {
        case Func::Exp: return inv_a * Expr::exp(av);
        case Func::Sin: return -(inv_a * Expr::cos(av));
        case Func::Cos: return inv_a * Expr::sin(av);
        default: break;
        }
    }
    Expr vm = Expr::pow(var, Expr::integer(m));
    Expr k = Expr::integer(m) * inv_a;
    switch (f) {
    case Func::Exp:
        return vm * Expr::exp(av) * inv_a - k * by_parts(m - 1, Func::Exp, a, av, var);
    case Func::Sin:
        return -(vm * Expr::cos(av) * inv_a) + k * by_parts(m - 1, Func::Cos, a, av, var);
    case Func::Cos:
        return vm * Expr::sin(av) * inv_a - k * by_parts(m - 1, Func::Sin, a, av, var);
    default: break;
    }
    return Expr::integer(0); // unreachable
}

// Antiderivative of the v-dependent factors of `term`, or nullopt when the
// v-part has no table entry.
std::optional<Expr> integrate_vpart(const std::vector<CanonicalFactor>& vpart,
                                    const std::string& v) {
    const Expr var = Expr::variable(v);
    if (vpart.empty()) return var; // v-free term: ∫ c dv = c v

    if (vpart.size() == 1) {
        const auto& [atom, q] = vpart.front();
        if (atom.kind() == Kind::Variable) {
            if (q == -1) return Expr::ln(var);
            Rational q1 = q + 1;
            return Expr::constant(Rational(1) / q1) * Expr::pow(var, Expr::constant(q1));
        }
        if (atom.kind() == Kind::Apply && q == 1) {
            const Func f = atom.function();
            if (f == Func::Exp || f == Func::Sin || f == Func::Cos) {
                auto a = linear_coefficient(atom.argument(), v);
                if (!a) return std::nullopt;
                return by_parts(0, f, *a, atom.argument(), var);
            }
            if (f == Func::Ln && atom.argument().kind() == Kind::Variable)
                return var * atom - var; // ∫ ln v dv = v ln v − v
        }
        return std::nullopt;
    }

    if (vpart.size() == 2) {
        // sorted order puts the Variable factor before the Apply factor
        const auto& [vatom, m] = vpart[0];
        const auto& [fatom, fq] = vpart[1];
        if (vatom.kind() != Kind::Variable || fatom.kind() != Kind::Apply || fq != 1)
            return std::nullopt;
        if (!is_integer(m) || m < 1 || numerator(m) > 16) return std::nullopt;
        const Func f = fatom.function();
        if (f != Func::Exp && f != Func::Sin && f != Func::Cos) return std::nullopt;
        auto a = linear_coefficient(fatom.argument(), v);
        if (!a) return std::nullopt;
        return by_parts(static_cast<int>(numerator(m).template convert_to<std::int64_t>()),
                        f, *a, fatom.argument(), var);
    }

    return std::nullopt;
}

TermSum ts_of(CanonicalTerm t) {
    TermSum ts;
    ts.add_term(std::move(t));
    return ts;
}

TermSum integrate_term(const CanonicalTerm& term, const std::string& v) {
    std::vector<CanonicalFactor> vpart;
    CanonicalTerm vfree;
    vfree.coefficient = term.coefficient;
    for (const auto& f : term.factors) {
        if (free_vars(f.atom).count(v))
            vpart.push_back(f);
        else
            vfree.factors.push_back(f);
    }
    auto anti = integrate_vpart(vpart, v);
    if (!anti) throw NotIntegrableError(render(term), v);
    return mul(canonicalize(*anti), ts_of(vfree));
}

} // namespace

Expr differentiate(const Expr& e, const std::string& v) {
    return render(canonicalize(d(e, v)));
}

Expr integrate(const Expr& e, const std::string& v) {
    TermSum ts = canonicalize(e);
    TermSum out;
    if (ts.constant() != 0) {
        CanonicalTerm ct;
        ct.coefficient = ts.constant();
        ct.factors.push_back({Expr::variable(v), Rational(1)});
        out.add_term(std::move(ct));
    }
    for (const auto& term : ts.terms()) out = add(out, integrate_term(term, v));
    return render(out);
}

bool is_basic_type_one(const Expr& f, const std::string& v) {
    return canonically_equal(integrate(differentiate(f, v), v), f);
}

bool is_basic_type_two(const Expr& f) {
    const auto vars = free_vars(f);
    if (vars.empty()) return false;
    for (const auto& v : vars)
        if (!is_basic_type_one(f, v)) return false;
    return true;
}

} // namespace exactform
