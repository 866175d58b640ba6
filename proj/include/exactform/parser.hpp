#pragma once

#include "exactform/errors.hpp"
#include "exactform/expr.hpp"
#include "exactform/form.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace exactform {

enum class TokenKind {
    Number, Identifier, Plus, Minus, Star, Slash, Caret,
    LParen, RParen, Comma, DiffMarker, Equals, End
};

const char* name_of(TokenKind k);

struct SourceSpan {
    std::size_t offset = 0;
    std::size_t length = 0;
};

struct Token {
    TokenKind kind;
    std::string lexeme;
    SourceSpan span;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, SourceSpan span,
               std::vector<TokenKind> expected = {});
    const SourceSpan& span() const { return span_; }
    const std::vector<TokenKind>& expected() const { return expected_; }

private:
    SourceSpan span_;
    std::vector<TokenKind> expected_;
};

// In form mode an identifier starting with 'd' followed by at least one more
// character lexes as a DiffMarker ("dx"); in expression mode it is a plain
// identifier. The End token is always appended.
std::vector<Token> tokenize(std::string_view input, bool form_mode);

// expr := add ; add := mul (("+"|"-") mul)* ; mul := unary (("*"|"/") unary)*
// unary := "-" unary | power ; power := atom ("^" unary)?
// atom := number | identifier | func "(" expr ")" | "(" expr ")"
// Reserved identifiers: sin cos tan exp ln sqrt pi e. Decimal literals
// become exact rationals (0.5 -> 1/2). No implicit multiplication.
Expr parse_expression(std::string_view input);

// form := term-d (("+"|"-") term-d)* ("=" "0")?
// term-d := expr? dmarker        (missing expr means coefficient 1)
// The coefficient expr is parsed greedily up to the next DiffMarker, so
// unparenthesized sums bind to the marker that follows them.
DifferentialForm parse_form(std::string_view input);

// Minimal parenthesization; negative exponents print as division
// (x^-1 -> "1/x"), exp(u) prints as "e^u". parse_expression(format_expr(e))
// canonicalizes back to canonicalize(e).
std::string format_expr(const Expr& e);

// "<coef> dx + <coef> dy ... = 0"; sum coefficients are parenthesized.
std::string format_form(const DifferentialForm& f);

} // namespace exactform
