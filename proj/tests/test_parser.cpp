#include "doctest.h"

#include "exactform/parser.hpp"
#include "exactform/term_sum.hpp"

#include "support/generators.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

using namespace exactform;

namespace {

const char* kGoldenForm =
    "(e^x*sin(y)*cos(z) - 2*y*sin(x)*e^z) dx"
    " + (e^x*cos(y)*cos(z) + 2*cos(x)*e^z + 1/(y*z)) dy"
    " + (2*y*cos(x)*e^z - e^x*sin(y)*sin(z) - ln(y)/z^2) dz = 0";

void check_span_in_bounds(const std::string& input, const ParseError& e) {
    CAPTURE(input);
    CHECK(e.span().offset <= input.size());
    if (e.span().length > 0) CHECK(e.span().offset + e.span().length <= input.size());
}

} // namespace

TEST_CASE("expression fixtures parse to the expected structure") {
    Expr e = parse_expression("sin(x)*cos(y) + sin(y)");
    REQUIRE(e.kind() == Kind::Sum);
    REQUIRE(e.operands().size() == 2);
    CHECK(e.operands()[0].kind() == Kind::Product);
    CHECK(e.operands()[1].kind() == Kind::Apply);

    Expr r = parse_expression("1/(y*z)");
    Expr built = Expr::pow(Expr::variable("y") * Expr::variable("z"), Expr::integer(-1));
    CHECK(canonically_equal(r, built));
    CHECK(eval_numeric(r, {{"y", 1.0}, {"z", 2.0}}) == doctest::Approx(0.5));

    // e^x normalizes to the exponential at construction time
    Expr ex = parse_expression("e^x");
    REQUIRE(ex.kind() == Kind::Apply);
    CHECK(ex.function() == Func::Exp);

    CHECK(parse_expression("pi").kind() == Kind::NamedConstant);
    CHECK(parse_expression("e").kind() == Kind::NamedConstant);

    // decimal literals become exact rationals
    CHECK(parse_expression("0.5").constant_value() == Rational(1, 2));
    CHECK(parse_expression("2.25").constant_value() == Rational(9, 4));
    CHECK(parse_expression("1.0").constant_value() == Rational(1));
}

TEST_CASE("operator precedence and associativity") {
    CHECK(parse_expression("2^3^2").constant_value() == Rational(512)); // right-assoc
    CHECK(parse_expression("-2^2").constant_value() == Rational(-4));   // ^ binds tighter
    CHECK(parse_expression("2*3+4*5").constant_value() == Rational(26));
    CHECK(parse_expression("2-3-4").constant_value() == Rational(-5)); // left-assoc
    CHECK(parse_expression("2/4/2").constant_value() == Rational(1, 4));
    CHECK(parse_expression("2^-1").constant_value() == Rational(1, 2));
    // sqrt desugars to ^(1/2); non-integer constant powers stay symbolic
    CHECK(parse_expression("sqrt(4)").kind() == Kind::Power);
    CHECK(eval_numeric(parse_expression("sqrt(4)"), {}) == doctest::Approx(2.0));
    CHECK(canonically_equal(parse_expression("-(x+y)"),
                            parse_expression("-x - y")));
}

TEST_CASE("malformed expressions raise positioned errors") {
    SUBCASE("unclosed call expects a right parenthesis") {
        try {
            parse_expression("sin(x");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            check_span_in_bounds("sin(x", e);
            const auto& exp = e.expected();
            CHECK(std::find(exp.begin(), exp.end(), TokenKind::RParen) != exp.end());
        }
    }
    SUBCASE("implicit multiplication is rejected") {
        try {
            parse_expression("2x");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            check_span_in_bounds("2x", e);
            CHECK(e.span().offset == 1);
        }
    }
    SUBCASE("form with dangling parenthesis") {
        try {
            parse_form("y dx + (");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            check_span_in_bounds("y dx + (", e);
            CHECK(e.span().offset == 8);
        }
    }
}

TEST_CASE("every parse error span stays inside the input") {
    const std::vector<std::string> corpus = {
        "",     "(",      ")",     "x +",  "sin()", "sin(x", "2x",
        "x^",   "1/",     "x y",   "3.",   "..",    "* x",   "e^",
        "ln x", "(x",     "x)",    "x ^ * 2",
    };
    for (const auto& input : corpus) {
        try {
            parse_expression(input);
        } catch (const ParseError& e) {
            check_span_in_bounds(input, e);
        }
    }
    const std::vector<std::string> form_corpus = {
        "", "dx dx", "y dx + (", "dx +", "y dx -", "= 0", "y dx = 1", "y dx x",
    };
    for (const auto& input : form_corpus) {
        try {
            parse_form(input);
        } catch (const ParseError& e) {
            check_span_in_bounds(input, e);
        } catch (const DuplicateVariableError&) {
        }
    }
}

TEST_CASE("form fixtures") {
    DifferentialForm f = parse_form("(2*x*y) dx + (x^2) dy = 0");
    REQUIRE(f.size() == 2);
    CHECK(f.variables() == std::vector<std::string>{"x", "y"});
    CHECK(canonically_equal(f.entries()[0].coefficient,
                            Expr::integer(2) * Expr::variable("x") * Expr::variable("y")));
    CHECK(canonically_equal(f.entries()[1].coefficient,
                            Expr::pow(Expr::variable("x"), Expr::integer(2))));

    DifferentialForm golden = parse_form(kGoldenForm);
    REQUIRE(golden.size() == 3);
    CHECK(golden.variables() == std::vector<std::string>{"x", "y", "z"});

    CHECK_THROWS_AS(parse_form("y dx + x dx"), DuplicateVariableError);

    // trailing "= 0" is optional and does not change the parse
    CHECK(format_form(parse_form("y dx + x dy")) ==
          format_form(parse_form("y dx + x dy = 0")));

    // a bare marker means coefficient 1
    DifferentialForm bare = parse_form("dx + y dy");
    CHECK(bare.entries()[0].coefficient.is_one());

    // sign chains fold into the coefficient
    DifferentialForm neg = parse_form("-y dx + x dy");
    CHECK(canonically_equal(neg.entries()[0].coefficient, -Expr::variable("y")));

    // the coefficient expression is parsed greedily up to the marker
    DifferentialForm greedy = parse_form("x + y dx");
    REQUIRE(greedy.size() == 1);
    CHECK(canonically_equal(greedy.entries()[0].coefficient,
                            Expr::variable("x") + Expr::variable("y")));
}

TEST_CASE("formatting fixtures") {
    CHECK(format_expr(Expr::sin(Expr::variable("x")) * Expr::cos(Expr::variable("y"))) ==
          "sin(x)*cos(y)");
    CHECK(format_expr(Expr::pow(Expr::e(), Expr::variable("x"))) == "e^x");
    CHECK(format_form(parse_form("y dx + x dy")) == "y dx + x dy = 0");
    CHECK(format_expr(parse_expression("ln(y)/z^2")) == "ln(y)/z^2");
    CHECK(format_expr(parse_expression("1/(y*z)")) == "1/(y*z)");
    CHECK(format_expr(parse_expression("-x - y")) == "-x - y");
    CHECK(format_expr(Expr::integer(0)) == "0");
    CHECK(format_expr(Expr::rational(-1, 2)) == "-1/2");
}

TEST_CASE("parse/format round trip is canonically the identity") {
    SplitMix64 rng(4242);
    for (int i = 0; i < 1000; ++i) {
        Expr e = testgen::arbitrary_expr(rng, 3);
        std::string text = format_expr(e);
        CAPTURE(i);
        CAPTURE(text);
        Expr back = parse_expression(text);
        REQUIRE(canonically_equal(back, e));
        // and the printed image is a fixed point
        REQUIRE(format_expr(back) == text);
    }
}

TEST_CASE("form round trip preserves order and coefficients") {
    SplitMix64 rng(515151);
    for (int i = 0; i < 200; ++i) {
        DifferentialForm f = testgen::arbitrary_form(rng);
        std::string text = format_form(f);
        CAPTURE(i);
        CAPTURE(text);
        DifferentialForm back = parse_form(text);
        REQUIRE(back.variables() == f.variables());
        for (std::size_t k = 0; k < f.size(); ++k)
            REQUIRE(canonically_equal(back.entries()[k].coefficient,
                                      f.entries()[k].coefficient));
        REQUIRE(format_form(back) == text);
    }
}

TEST_CASE("tokenizer spans cover exactly the non-whitespace input") {
    SplitMix64 rng(77);
    std::vector<std::string> inputs = {
        kGoldenForm,
        "2*x*y dx + x^2 dy = 0",
        "sin(x)*cos(y) + sin(y)",
        "  1/2 ^ x  - y ",
    };
    for (int i = 0; i < 50; ++i)
        inputs.push_back(format_expr(testgen::arbitrary_expr(rng, 3)));

    for (const auto& input : inputs) {
        for (bool form_mode : {false, true}) {
            auto tokens = tokenize(input, form_mode);
            REQUIRE(!tokens.empty());
            CHECK(tokens.back().kind == TokenKind::End);
            std::size_t prev_end = 0;
            std::string covered(input.size(), ' ');
            for (const auto& t : tokens) {
                if (t.kind == TokenKind::End) continue;
                CAPTURE(input);
                CAPTURE(t.lexeme);
                REQUIRE(t.span.offset >= prev_end);
                REQUIRE(t.span.offset + t.span.length <= input.size());
                REQUIRE(input.substr(t.span.offset, t.span.length) == t.lexeme);
                for (std::size_t p = t.span.offset; p < t.span.offset + t.span.length; ++p)
                    covered[p] = input[p];
                prev_end = t.span.offset + t.span.length;
            }
            // gaps between spans hold only whitespace
            for (std::size_t p = 0; p < input.size(); ++p)
                if (covered[p] == ' ' && input[p] != ' ')
                    CHECK(std::isspace(static_cast<unsigned char>(input[p])));
        }
    }
}
