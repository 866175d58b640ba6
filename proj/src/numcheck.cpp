#include "exactform/numcheck.hpp"

#include "exactform/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

namespace exactform {

namespace {

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive(const std::function<double(double)>& f, double a, double b, double fa,
                double fm, double fb, double whole, double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * eps) return left + right + delta / 15.0;
    if (depth <= 0)
        throw QuadratureError("adaptive Simpson failed to reach tolerance on [" +
                              std::to_string(a) + ", " + std::to_string(b) + "]");
    return adaptive(f, a, m, fa, flm, fm, left, eps / 2.0, depth - 1) +
           adaptive(f, m, b, fm, frm, fb, right, eps / 2.0, depth - 1);
}

double integrate_segment(const std::function<double(double)>& f, double a, double b,
                         double eps) {
    if (a == b) return 0.0;
    const double fa = f(a);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double fb = f(b);
    return adaptive(f, a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), eps, 40);
}

constexpr double kQuadEps = 1e-8;

} // namespace

double reconstruct_potential(const DifferentialForm& f, const Assignment& base,
                             const Assignment& target,
                             const std::vector<std::string>& order) {
    std::map<std::string, Expr> coef;
    for (const auto& e : f.entries()) coef.emplace(e.variable, e.coefficient);
    {
        std::set<std::string> want(order.begin(), order.end());
        std::set<std::string> have;
        for (const auto& e : f.entries()) have.insert(e.variable);
        if (want != have || order.size() != have.size())
            throw Error("integration order must list each form variable exactly once");
    }

    Assignment current = base;
    double total = 0.0;
    for (const auto& v : order) {
        const Expr& m = coef.at(v);
        auto integrand = [&](double t) {
            Assignment pt = current;
            pt[v] = t;
            return eval_numeric(m, pt);
        };
        total += integrate_segment(integrand, base.at(v), target.at(v), kQuadEps);
        current[v] = target.at(v);
    }
    return total;
}

double reconstruct_potential(const DifferentialForm& f, const Assignment& base,
                             const Assignment& target) {
    return reconstruct_potential(f, base, target, f.variables());
}

PathIndependenceReport path_independence_check(const DifferentialForm& f,
                                               const Assignment& base,
                                               const Assignment& target) {
    PathIndependenceReport r;
    std::vector<std::string> order = f.variables();
    r.forward = reconstruct_potential(f, base, target, order);
    std::reverse(order.begin(), order.end());
    r.reversed = reconstruct_potential(f, base, target, order);
    r.deviation = std::fabs(r.forward - r.reversed);
    r.pass = r.deviation <= 1e-4;
    return r;
}

GradientCheckReport gradient_check(const Expr& phi, const DifferentialForm& f,
                                   const DomainBox& box, int points, std::uint64_t seed) {
    constexpr double kRelTol = 1e-5;

    std::set<std::string> var_set = free_vars(phi);
    for (const auto& e : f.entries()) {
        var_set.insert(e.variable);
        auto fv = free_vars(e.coefficient);
        var_set.insert(fv.begin(), fv.end());
    }
    const std::vector<std::string> vars(var_set.begin(), var_set.end());

    std::map<std::string, double> h;
    for (const auto& e : f.entries()) {
        const Interval iv = box.interval(e.variable);
        h[e.variable] = 1e-5 * (iv.hi - iv.lo);
    }

    GradientCheckReport report;
    SplitMix64 rng(seed);
    auto probe = [&](const Assignment& pt) {
        // evaluating everything doubles as the rejection predicate; commit to
        // the report only once the whole point evaluated cleanly
        double local_max = -1.0;
        std::string local_worst;
        for (const auto& e : f.entries()) {
            Assignment lo = pt, hi = pt;
            lo[e.variable] -= h[e.variable];
            hi[e.variable] += h[e.variable];
            const double fd =
                (eval_numeric(phi, hi) - eval_numeric(phi, lo)) / (2.0 * h[e.variable]);
            const double want = eval_numeric(e.coefficient, pt);
            const double dev = std::fabs(fd - want) / std::max(1.0, std::fabs(want));
            if (dev > local_max) {
                local_max = dev;
                local_worst = e.variable;
            }
        }
        ++report.points;
        if (local_max > report.max_rel_deviation) {
            report.max_rel_deviation = local_max;
            report.worst_variable = local_worst;
        }
    };
    sample_valid_points(vars, box, points, std::min(points, 8), rng, probe);
    report.pass = report.max_rel_deviation < kRelTol;
    return report;
}

} // namespace exactform
