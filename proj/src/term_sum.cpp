#include "exactform/term_sum.hpp"

#include <algorithm>
#include <cassert>

namespace exactform {

namespace {

// Sums with integer exponents above this stay as opaque power atoms instead
// of being multiplied out.
constexpr std::int64_t kExpandCap = 64;

TermSum ts_one_term(CanonicalTerm t) {
    TermSum ts;
    ts.add_term(std::move(t));
    return ts;
}

TermSum single_atom(Expr atom, Rational exponent) {
    CanonicalTerm t;
    t.coefficient = 1;
    t.factors.push_back({std::move(atom), std::move(exponent)});
    return ts_one_term(std::move(t));
}

TermSum atom_power(const Expr& atom, const Rational& q);
TermSum sum_base_power(const Expr& base, const Rational& q);

// c^q as a TermSum: a rational constant when it folds exactly, otherwise a
// single opaque power atom.
TermSum fold_const_pow(const Rational& c, const Rational& q) {
    if (q == 0) return TermSum(Rational(1)); // 0^0 := 1
    if (c == 1) return TermSum(Rational(1));
    if (c == 0 && q > 0) return TermSum(Rational(0));
    if (is_integer(q) && fits_int64(numerator(q))) {
        const auto e = numerator(q).template convert_to<std::int64_t>();
        if (std::llabs(e) <= kMaxFoldedExponent && (c != 0 || e > 0))
            return TermSum(pow_rational(c, e));
    }
    return single_atom(Expr::pow(Expr::constant(c), Expr::constant(q)), Rational(1));
}

// atom^q normalized: exp(u)^q folds q into the argument, nested powers
// multiply exponents, constants fold. Power and exp atoms always come out
// carrying factor exponent 1 so that identical values share one spelling.
TermSum atom_power(const Expr& atom, const Rational& q) {
    if (q == 0) return TermSum(Rational(1));
    switch (atom.kind()) {
    case Kind::Constant:
        return fold_const_pow(atom.constant_value(), q);
    case Kind::NamedConstant:
    case Kind::Variable:
        return single_atom(atom, q);
    case Kind::Apply: {
        if (atom.function() == Func::Exp && q != 1) {
            // exp(u)^q = exp(q*u)
            TermSum arg = mul(canonicalize(atom.argument()), TermSum(q));
            Expr folded = Expr::exp(render(arg));
            if (folded.is_constant()) return TermSum(folded.constant_value());
            return single_atom(std::move(folded), Rational(1));
        }
        return single_atom(atom, q);
    }
    case Kind::Power: {
        const Expr& b = atom.base();
        const Expr& u = atom.exponent();
        if (u.is_constant()) {
            Rational combined = u.constant_value() * q;
            if (b.is_constant()) return fold_const_pow(b.constant_value(), combined);
            if (b.kind() == Kind::Sum) return sum_base_power(b, combined);
            return atom_power(b, combined);
        }
        if (q == 1) return single_atom(atom, Rational(1));
        // (b^u)^q = b^(u*q) for non-constant u
        TermSum newexp = mul(canonicalize(u), TermSum(q));
        if (newexp.is_pure_constant()) return atom_power(b, newexp.constant());
        Expr folded = Expr::pow(b, render(newexp));
        if (folded.is_constant()) return TermSum(folded.constant_value());
        if (folded.kind() != Kind::Power) return canonicalize(folded);
        return single_atom(std::move(folded), Rational(1));
    }
    default:
        // atoms are never Sum or Product nodes
        assert(false);
        return single_atom(atom, q);
    }
}

// (sum)^q where the base is a canonical, rendered Sum expression.
TermSum sum_base_power(const Expr& base, const Rational& q) {
    if (q == 0) return TermSum(Rational(1));
    if (q == 1) return canonicalize(base);
    if (q > 1 && is_integer(q) && numerator(q) <= kExpandCap)
        return pow(canonicalize(base), q);
    return single_atom(Expr::pow(base, Expr::constant(q)), Rational(1));
}

// Product of two canonical terms. Colliding atoms add exponents and get
// renormalized through atom_power, which may fan out into several terms
// (e.g. expanding a sum power), hence a TermSum.
TermSum term_mul(const CanonicalTerm& a, const CanonicalTerm& b) {
    CanonicalTerm out;
    out.coefficient = a.coefficient * b.coefficient;
    std::vector<std::pair<Expr, Rational>> renorm;

    std::size_t i = 0, j = 0;
    while (i < a.factors.size() || j < b.factors.size()) {
        int c;
        if (i == a.factors.size())
            c = 1;
        else if (j == b.factors.size())
            c = -1;
        else
            c = compare(a.factors[i].atom, b.factors[j].atom);
        if (c < 0) {
            out.factors.push_back(a.factors[i++]);
        } else if (c > 0) {
            out.factors.push_back(b.factors[j++]);
        } else {
            Rational e = a.factors[i].exponent + b.factors[j].exponent;
            if (e != 0) renorm.emplace_back(a.factors[i].atom, std::move(e));
            ++i;
            ++j;
        }
    }

    TermSum result = out.factors.empty() && renorm.empty()
                         ? TermSum(out.coefficient)
                         : ts_one_term(std::move(out));
    if (result.is_zero()) return result;
    for (const auto& [atom, e] : renorm) result = mul(result, atom_power(atom, e));
    return result;
}

void add_in_place(TermSum& acc, const TermSum& x) {
    for (const auto& t : x.terms()) acc.add_term(t);
    acc.add_constant(x.constant());
}

CanonicalTerm scaled(const CanonicalTerm& t, const Rational& k) {
    CanonicalTerm out = t;
    out.coefficient *= k;
    return out;
}

TermSum canonicalize_power(const Expr& base, const TermSum& exponent);

} // namespace

void TermSum::add_term(CanonicalTerm term) {
    assert(term.coefficient != 0);
    if (term.factors.empty()) {
        constant_ += term.coefficient;
        return;
    }
    auto it = std::lower_bound(terms_.begin(), terms_.end(), term,
                               [](const CanonicalTerm& a, const CanonicalTerm& b) {
                                   return compare_structure(a, b) < 0;
                               });
    if (it != terms_.end() && compare_structure(*it, term) == 0) {
        it->coefficient += term.coefficient;
        if (it->coefficient == 0) terms_.erase(it);
    } else {
        terms_.insert(it, std::move(term));
    }
}

int compare(const CanonicalFactor& a, const CanonicalFactor& b) {
    if (int c = compare(a.atom, b.atom)) return c;
    if (a.exponent < b.exponent) return -1;
    if (b.exponent < a.exponent) return 1;
    return 0;
}

int compare_structure(const CanonicalTerm& a, const CanonicalTerm& b) {
    const std::size_t n = std::min(a.factors.size(), b.factors.size());
    for (std::size_t i = 0; i < n; ++i)
        if (int c = compare(a.factors[i], b.factors[i])) return c;
    if (a.factors.size() != b.factors.size())
        return a.factors.size() < b.factors.size() ? -1 : 1;
    return 0;
}

bool equal(const TermSum& a, const TermSum& b) {
    if (a.constant() != b.constant()) return false;
    if (a.terms().size() != b.terms().size()) return false;
    for (std::size_t i = 0; i < a.terms().size(); ++i) {
        if (a.terms()[i].coefficient != b.terms()[i].coefficient) return false;
        if (compare_structure(a.terms()[i], b.terms()[i]) != 0) return false;
    }
    return true;
}

TermSum add(const TermSum& a, const TermSum& b) {
    TermSum out = a;
    add_in_place(out, b);
    return out;
}

TermSum mul(const TermSum& a, const TermSum& b) {
    TermSum out;
    out.add_constant(a.constant() * b.constant());
    if (b.constant() != 0)
        for (const auto& t : a.terms()) out.add_term(scaled(t, b.constant()));
    if (a.constant() != 0)
        for (const auto& t : b.terms()) out.add_term(scaled(t, a.constant()));
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms()) add_in_place(out, term_mul(ta, tb));
    return out;
}

TermSum pow(const TermSum& base, const Rational& exponent) {
    if (exponent == 0) return TermSum(Rational(1));
    if (exponent == 1) return base;
    if (base.is_pure_constant()) return fold_const_pow(base.constant(), exponent);
    if (base.terms().size() == 1 && base.constant() == 0) {
        const CanonicalTerm& t = base.terms().front();
        TermSum out = fold_const_pow(t.coefficient, exponent);
        for (const auto& f : t.factors)
            out = mul(out, atom_power(f.atom, f.exponent * exponent));
        return out;
    }
    // genuine sum
    if (exponent > 1 && is_integer(exponent) && numerator(exponent) <= kExpandCap) {
        auto n = numerator(exponent).template convert_to<std::int64_t>();
        TermSum acc(Rational(1));
        TermSum sq = base;
        while (n > 0) {
            if (n & 1) acc = mul(acc, sq);
            n >>= 1;
            if (n > 0) sq = mul(sq, sq);
        }
        return acc;
    }
    return single_atom(Expr::pow(render(base), Expr::constant(exponent)), Rational(1));
}

namespace {

TermSum canonicalize_power(const Expr& base, const TermSum& exponent) {
    if (exponent.is_pure_constant()) return pow(canonicalize(base), exponent.constant());
    Expr nb = render(canonicalize(base));
    if (nb.is_constant() && nb.constant_value() == 1) return TermSum(Rational(1));
    if (nb.kind() == Kind::Power) {
        // (b^p)^u = b^(p*u)
        TermSum combined = mul(canonicalize(nb.exponent()), exponent);
        return canonicalize_power(nb.base(), combined);
    }
    // may come out as exp(u) when the base is the named constant e
    Expr atom = Expr::pow(nb, render(exponent));
    if (atom.is_constant()) return TermSum(atom.constant_value());
    return single_atom(std::move(atom), Rational(1));
}

} // namespace

TermSum canonicalize(const Expr& e) {
    switch (e.kind()) {
    case Kind::Constant:
        return TermSum(e.constant_value());
    case Kind::NamedConstant:
    case Kind::Variable:
        return single_atom(e, Rational(1));
    case Kind::Apply: {
        Expr arg = render(canonicalize(e.argument()));
        // exp(c) and e^c must land on one spelling; constant exponentials
        // live on the named-constant atom so that exp(1) = e canonically.
        if (e.function() == Func::Exp && arg.is_constant()) {
            if (arg.constant_value() == 0) return TermSum(Rational(1));
            return single_atom(Expr::e(), arg.constant_value());
        }
        Expr atom = Expr::apply(e.function(), std::move(arg));
        if (atom.is_constant()) return TermSum(atom.constant_value());
        if (atom.kind() != Kind::Apply) return canonicalize(atom);
        return single_atom(std::move(atom), Rational(1));
    }
    case Kind::Power:
        return canonicalize_power(e.base(), canonicalize(e.exponent()));
    case Kind::Sum: {
        TermSum out;
        for (const auto& op : e.operands()) add_in_place(out, canonicalize(op));
        return out;
    }
    case Kind::Product: {
        TermSum out{Rational(1)};
        for (const auto& op : e.operands()) out = mul(out, canonicalize(op));
        return out;
    }
    }
    return TermSum();
}

Expr render(const CanonicalTerm& t) {
    std::vector<Expr> ops;
    if (t.coefficient != 1) ops.push_back(Expr::constant(t.coefficient));
    for (const auto& f : t.factors) {
        if (f.exponent == 1)
            ops.push_back(f.atom);
        else
            ops.push_back(Expr::pow(f.atom, Expr::constant(f.exponent)));
    }
    return Expr::product(std::move(ops));
}

Expr render(const TermSum& t) {
    std::vector<Expr> ops;
    ops.reserve(t.terms().size() + 1);
    for (const auto& term : t.terms()) ops.push_back(render(term));
    if (t.constant() != 0) ops.push_back(Expr::constant(t.constant()));
    if (ops.empty()) return Expr::constant(t.constant());
    return Expr::sum(std::move(ops));
}

bool canonically_equal(const Expr& a, const Expr& b) {
    return equal(canonicalize(a), canonicalize(b));
}

bool canonically_zero(const Expr& e) { return canonicalize(e).is_zero(); }

} // namespace exactform
