#include "exactform/parser.hpp"

#include "exactform/term_sum.hpp"

#include <cctype>
#include <sstream>

namespace exactform {

const char* name_of(TokenKind k) {
    switch (k) {
    case TokenKind::Number: return "number";
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::Caret: return "'^'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Comma: return "','";
    case TokenKind::DiffMarker: return "differential marker";
    case TokenKind::Equals: return "'='";
    case TokenKind::End: return "end of input";
    }
    return "?";
}

ParseError::ParseError(const std::string& message, SourceSpan span,
                       std::vector<TokenKind> expected)
    : Error("parse error at offset " + std::to_string(span.offset) + ": " + message),
      span_(span), expected_(std::move(expected)) {}

std::vector<Token> tokenize(std::string_view input, bool form_mode) {
    std::vector<Token> out;
    std::size_t i = 0;
    const auto n = input.size();
    while (i < n) {
        const char c = input[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < n && std::isdigit(static_cast<unsigned char>(input[i]))) ++i;
            if (i < n && input[i] == '.') {
                ++i;
                if (i >= n || !std::isdigit(static_cast<unsigned char>(input[i])))
                    throw ParseError("expected digits after decimal point",
                                     {i, i < n ? std::size_t(1) : std::size_t(0)},
                                     {TokenKind::Number});
                while (i < n && std::isdigit(static_cast<unsigned char>(input[i]))) ++i;
            }
            out.push_back({TokenKind::Number, std::string(input.substr(start, i - start)),
                           {start, i - start}});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < n && (std::isalnum(static_cast<unsigned char>(input[i])) || input[i] == '_'))
                ++i;
            std::string word(input.substr(start, i - start));
            const bool marker = form_mode && word.size() >= 2 && word[0] == 'd';
            out.push_back({marker ? TokenKind::DiffMarker : TokenKind::Identifier,
                           std::move(word), {start, i - start}});
            continue;
        }
        TokenKind kind;
        switch (c) {
        case '+': kind = TokenKind::Plus; break;
        case '-': kind = TokenKind::Minus; break;
        case '*': kind = TokenKind::Star; break;
        case '/': kind = TokenKind::Slash; break;
        case '^': kind = TokenKind::Caret; break;
        case '(': kind = TokenKind::LParen; break;
        case ')': kind = TokenKind::RParen; break;
        case ',': kind = TokenKind::Comma; break;
        case '=': kind = TokenKind::Equals; break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", {start, 1});
        }
        out.push_back({kind, std::string(1, c), {start, 1}});
        ++i;
    }
    out.push_back({TokenKind::End, "", {n, 0}});
    return out;
}

namespace {

Rational rational_from_literal(const std::string& lexeme) {
    const auto dot = lexeme.find('.');
    if (dot == std::string::npos) return Rational(Integer(lexeme));
    const std::string digits = lexeme.substr(0, dot) + lexeme.substr(dot + 1);
    Integer den = 1;
    for (std::size_t k = dot + 1; k < lexeme.size(); ++k) den *= 10;
    return Rational(Integer(digits), den);
}

bool is_function_name(const std::string& s, Func& f) {
    if (s == "sin") { f = Func::Sin; return true; }
    if (s == "cos") { f = Func::Cos; return true; }
    if (s == "tan") { f = Func::Tan; return true; }
    if (s == "exp") { f = Func::Exp; return true; }
    if (s == "ln") { f = Func::Ln; return true; }
    if (s == "sqrt") { f = Func::Sqrt; return true; }
    return false;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    Expr parse_add() {
        Expr lhs = parse_mul();
        while (check(TokenKind::Plus) || check(TokenKind::Minus)) {
            const bool plus = advance().kind == TokenKind::Plus;
            Expr rhs = parse_mul();
            lhs = plus ? lhs + rhs : lhs - rhs;
        }
        return lhs;
    }

    const Token& peek() const { return toks_[pos_]; }

    // Coefficient of one form entry. A bare marker means 1, and "-dx" means
    // (-1) dx; any other leading '-' belongs to the greedy expression, so
    // "-y + z dx" keeps meaning (z - y) dx.
    Expr parse_coefficient() {
        if (check(TokenKind::DiffMarker)) return Expr::integer(1);
        if (check(TokenKind::Minus) && toks_[pos_ + 1].kind == TokenKind::DiffMarker) {
            advance();
            return Expr::integer(-1);
        }
        return parse_add();
    }

    const Token& expect(TokenKind k, const std::string& what) {
        if (!check(k)) throw ParseError("expected " + what, peek().span, {k});
        return advance();
    }

    bool check(TokenKind k) const { return peek().kind == k; }

    bool accept(TokenKind k) {
        if (!check(k)) return false;
        advance();
        return true;
    }

private:
    const Token& advance() { return toks_[pos_++]; }

    Expr parse_mul() {
        Expr lhs = parse_unary();
        while (check(TokenKind::Star) || check(TokenKind::Slash)) {
            const bool mul = advance().kind == TokenKind::Star;
            Expr rhs = parse_unary();
            lhs = mul ? lhs * rhs : lhs / rhs;
        }
        return lhs;
    }

    Expr parse_unary() {
        if (accept(TokenKind::Minus)) return -parse_unary();
        return parse_power();
    }

    Expr parse_power() {
        Expr base = parse_atom();
        if (accept(TokenKind::Caret)) return Expr::pow(std::move(base), parse_unary());
        return base;
    }

    Expr parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
        case TokenKind::Number: {
            advance();
            return Expr::constant(rational_from_literal(t.lexeme));
        }
        case TokenKind::Identifier: {
            advance();
            Func f;
            if (is_function_name(t.lexeme, f)) {
                expect(TokenKind::LParen, "'(' after " + t.lexeme);
                Expr arg = parse_add();
                expect(TokenKind::RParen, "')'");
                return Expr::apply(f, std::move(arg));
            }
            if (t.lexeme == "pi") return Expr::pi();
            if (t.lexeme == "e") return Expr::e();
            return Expr::variable(t.lexeme);
        }
        case TokenKind::LParen: {
            advance();
            Expr inner = parse_add();
            expect(TokenKind::RParen, "')'");
            return inner;
        }
        default:
            throw ParseError("expected an expression", t.span,
                             {TokenKind::Number, TokenKind::Identifier, TokenKind::LParen});
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

} // namespace

Expr parse_expression(std::string_view input) {
    Parser p(tokenize(input, false));
    Expr e = p.parse_add();
    p.expect(TokenKind::End, "end of input");
    return e;
}

DifferentialForm parse_form(std::string_view input) {
    Parser p(tokenize(input, true));
    std::vector<FormEntry> entries;
    bool negate = false;
    for (;;) {
        Expr coef = p.parse_coefficient();
        if (negate) coef = -coef;
        const Token marker = p.expect(TokenKind::DiffMarker, "differential marker like dx");
        entries.push_back({marker.lexeme.substr(1), std::move(coef)});
        if (p.accept(TokenKind::Plus)) {
            negate = false;
        } else if (p.accept(TokenKind::Minus)) {
            negate = true;
        } else {
            break;
        }
    }
    if (p.accept(TokenKind::Equals)) {
        const Token& rhs = p.expect(TokenKind::Number, "0 after '='");
        if (rational_from_literal(rhs.lexeme) != 0)
            throw ParseError("right-hand side must be 0", rhs.span, {TokenKind::Number});
    }
    p.expect(TokenKind::End, "end of input");
    return DifferentialForm(std::move(entries));
}

// ---- formatting ----

namespace {

// printed precedence levels, mirroring the grammar
constexpr int kPrecSum = 0;
constexpr int kPrecProd = 1;
constexpr int kPrecUnary = 2;
constexpr int kPrecPow = 3;
constexpr int kPrecAtom = 4;

struct Printed {
    std::string text;
    int prec;
};

Printed print(const Expr& e);

std::string print_at(const Expr& e, int required) {
    Printed p = print(e);
    if (p.prec < required) return "(" + p.text + ")";
    return p.text;
}

Printed print_constant(const Rational& q) {
    std::string s = to_string(q);
    if (is_integer(q)) return {std::move(s), q < 0 ? kPrecUnary : kPrecAtom};
    return {std::move(s), kPrecProd}; // contains '/'
}

// Product/quotient assembly shared by Product nodes and negative powers.
struct Split {
    Rational coef = 1;
    std::vector<std::string> num;
    std::vector<std::string> den;
};

void split_factor(const Expr& f, Split& s) {
    if (f.is_constant()) {
        s.coef *= f.constant_value();
        return;
    }
    if (f.kind() == Kind::Power && f.exponent().is_constant() &&
        f.exponent().constant_value() < 0) {
        const Rational& q = f.exponent().constant_value();
        if (q == -1)
            s.den.push_back(print_at(f.base(), kPrecPow + 1));
        else
            s.den.push_back(print_at(f.base(), kPrecPow + 1) + "^" +
                            print_at(Expr::constant(-q), kPrecUnary));
        return;
    }
    s.num.push_back(print_at(f, kPrecUnary));
}

Printed assemble(const Split& s) {
    const bool negative = s.coef < 0;
    const Rational mag = negative ? Rational(-s.coef) : s.coef;

    std::vector<std::string> num = s.num;
    std::vector<std::string> den = s.den;
    if (numerator(mag) != 1 || num.empty())
        num.insert(num.begin(), numerator(mag).str());
    if (denominator(mag) != 1) den.insert(den.begin(), denominator(mag).str());

    std::string text;
    for (std::size_t i = 0; i < num.size(); ++i) {
        if (i) text += "*";
        text += num[i];
    }
    if (!den.empty()) {
        text += "/";
        if (den.size() == 1) {
            text += den[0];
        } else {
            text += "(";
            for (std::size_t i = 0; i < den.size(); ++i) {
                if (i) text += "*";
                text += den[i];
            }
            text += ")";
        }
    }

    int prec = kPrecProd;
    if (den.empty() && num.size() == 1) prec = negative ? kPrecUnary : kPrecAtom;
    if (negative) text = "-" + text;
    return {std::move(text), prec};
}

Printed print(const Expr& e) {
    switch (e.kind()) {
    case Kind::Constant:
        return print_constant(e.constant_value());
    case Kind::NamedConstant:
        return {name_of(e.named_value()), kPrecAtom};
    case Kind::Variable:
        return {e.variable_name(), kPrecAtom};
    case Kind::Apply: {
        if (e.function() == Func::Exp) {
            // "e^1" would reparse as plain e; print it that way to begin with
            if (e.argument().is_one()) return {"e", kPrecAtom};
            return {"e^" + print_at(e.argument(), kPrecPow), kPrecPow};
        }
        return {std::string(name_of(e.function())) + "(" + print_at(e.argument(), kPrecSum) + ")",
                kPrecAtom};
    }
    case Kind::Power: {
        const Expr& b = e.base();
        const Expr& x = e.exponent();
        if (x.is_constant() && x.constant_value() < 0) {
            Split s;
            split_factor(e, s);
            return assemble(s);
        }
        return {print_at(b, kPrecAtom) + "^" + print_at(x, kPrecPow), kPrecPow};
    }
    case Kind::Product: {
        Split s;
        for (const auto& op : e.operands()) split_factor(op, s);
        return assemble(s);
    }
    case Kind::Sum: {
        std::string text;
        bool first = true;
        for (const auto& op : e.operands()) {
            Printed p = print(op);
            if (first) {
                text = std::move(p.text);
                first = false;
                continue;
            }
            if (!p.text.empty() && p.text[0] == '-')
                text += " - " + p.text.substr(1);
            else
                text += " + " + p.text;
        }
        return {std::move(text), kPrecSum};
    }
    }
    return {"0", kPrecAtom};
}

} // namespace

std::string format_expr(const Expr& e) { return print(e).text; }

std::string format_form(const DifferentialForm& f) {
    std::string out;
    bool first = true;
    for (const auto& [var, coef] : f.entries()) {
        std::string piece;
        if (canonically_equal(coef, Expr::integer(1))) {
            piece = "";
        } else if (canonically_equal(coef, Expr::integer(-1))) {
            piece = "-";
        } else {
            piece = print_at(coef, kPrecProd);
            piece += " ";
        }
        if (first) {
            out += piece;
            first = false;
        } else if (!piece.empty() && piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
        out += "d" + var;
    }
    out += " = 0";
    return out;
}

} // namespace exactform
