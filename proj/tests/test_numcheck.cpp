#include "doctest.h"

#include "exactform/errors.hpp"
#include "exactform/fuzz.hpp"
#include "exactform/numcheck.hpp"
#include "exactform/parser.hpp"

#include <cmath>

using namespace exactform;

namespace {

const char* kGoldenForm =
    "(e^x*sin(y)*cos(z) - 2*y*sin(x)*e^z) dx"
    " + (e^x*cos(y)*cos(z) + 2*cos(x)*e^z + 1/(y*z)) dy"
    " + (2*y*cos(x)*e^z - e^x*sin(y)*sin(z) - ln(y)/z^2) dz = 0";

const char* kGoldenPotential = "e^x*sin(y)*cos(z) + 2*y*cos(x)*e^z + ln(y)/z";

} // namespace

TEST_CASE("line integral of d(xy) between corners") {
    DifferentialForm f = parse_form("y dx + x dy");
    double v = reconstruct_potential(f, {{"x", 0.0}, {"y", 0.0}}, {{"x", 1.0}, {"y", 2.0}});
    CHECK(v == doctest::Approx(2.0).epsilon(1e-6));

    // zero form integrates to zero
    DifferentialForm zero = parse_form("0 dx + 0 dy");
    CHECK(reconstruct_potential(zero, {{"x", 0.2}, {"y", 0.4}}, {{"x", 1.7}, {"y", 1.1}}) ==
          doctest::Approx(0.0));
}

TEST_CASE("reconstruction matches the golden potential difference") {
    DifferentialForm f = parse_form(kGoldenForm);
    Expr phi = parse_expression(kGoldenPotential);
    Assignment base{{"x", 1.0}, {"y", 1.0}, {"z", 1.0}};
    Assignment target{{"x", 1.5}, {"y", 1.2}, {"z", 0.8}};
    double want = eval_numeric(phi, target) - eval_numeric(phi, base);
    double got = reconstruct_potential(f, base, target);
    CHECK(std::abs(got - want) < 1e-4);

    // explicit reversed order must agree for an exact form
    double rev = reconstruct_potential(f, base, target, {"z", "y", "x"});
    CHECK(std::abs(rev - want) < 1e-4);
}

TEST_CASE("reconstruction validates the variable order") {
    DifferentialForm f = parse_form("y dx + x dy");
    Assignment base{{"x", 0.0}, {"y", 0.0}};
    Assignment target{{"x", 1.0}, {"y", 1.0}};
    CHECK_THROWS_AS(reconstruct_potential(f, base, target, {"x"}), Error);
    CHECK_THROWS_AS(reconstruct_potential(f, base, target, {"x", "y", "z"}), Error);
    CHECK_THROWS_AS(reconstruct_potential(f, base, target, {"x", "x"}), Error);
}

TEST_CASE("integration across a singularity raises DomainError") {
    DifferentialForm f = parse_form("1/x dx");
    CHECK_THROWS_AS(reconstruct_potential(f, {{"x", -1.0}}, {{"x", 1.0}}), DomainError);
}

TEST_CASE("path independence holds exactly when the form is exact") {
    PathIndependenceReport golden = path_independence_check(
        parse_form(kGoldenForm), {{"x", 1.0}, {"y", 1.0}, {"z", 1.0}},
        {{"x", 1.5}, {"y", 1.2}, {"z", 0.8}});
    CHECK(golden.pass);
    CHECK(std::abs(golden.forward - golden.reversed) < 1e-4);

    PathIndependenceReport sq = path_independence_check(
        parse_form("2*x*y dx + x^2 dy"), {{"x", 0.5}, {"y", 0.5}},
        {{"x", 1.5}, {"y", 1.5}});
    CHECK(sq.pass);

    // the canonical non-exact witness: orders disagree by 2 on this square
    PathIndependenceReport bad = path_independence_check(
        parse_form("y dx - x dy"), {{"x", 1.0}, {"y", 1.0}}, {{"x", 2.0}, {"y", 2.0}});
    CHECK_FALSE(bad.pass);
    CHECK(bad.forward == doctest::Approx(-1.0).epsilon(1e-6));
    CHECK(bad.reversed == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(bad.deviation == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("gradient check fixtures") {
    DomainBox box;
    GradientCheckReport ok =
        gradient_check(parse_expression("x*y"), parse_form("y dx + x dy"), box, 20);
    CHECK(ok.pass);
    CHECK(ok.points == 20);
    CHECK(ok.max_rel_deviation < 1e-5);

    GradientCheckReport golden = gradient_check(
        parse_expression(kGoldenPotential), parse_form(kGoldenForm), box, 20);
    CHECK(golden.pass);

    GradientCheckReport bad =
        gradient_check(parse_expression("x*y"), parse_form("y dx + 2*x dy"), box, 20);
    CHECK_FALSE(bad.pass);
    CHECK(bad.worst_variable == "y");
    CHECK(bad.max_rel_deviation > 0.2); // FD sees x, the form claims 2x
}

TEST_CASE("reconstruction agrees with generated potentials") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        GenConfig cfg;
        cfg.seed = seed;
        cfg.num_vars = 2 + static_cast<int>(seed % 3);
        cfg.num_terms = 3;
        GeneratedPotential g = generate_potential(cfg);
        DifferentialForm f = derive_form(g.potential, g.variables);

        SplitMix64 rng(seed * 977);
        Assignment base, target;
        for (const auto& v : g.variables) {
            Interval iv = g.box.interval(v);
            base[v] = rng.next_double(iv.lo, iv.hi);
            target[v] = rng.next_double(iv.lo, iv.hi);
        }
        double want = eval_numeric(g.potential, target) - eval_numeric(g.potential, base);
        double got = reconstruct_potential(f, base, target);
        CAPTURE(seed);
        CAPTURE(format_expr(g.potential));
        REQUIRE(std::abs(got - want) < 1e-4);

        PathIndependenceReport rep = path_independence_check(f, base, target);
        REQUIRE(rep.pass);
    }
}
