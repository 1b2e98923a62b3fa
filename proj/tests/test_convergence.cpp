#include "cvpt/convergence.hpp"
#include "cvpt/errors.hpp"
#include "cvpt/vpt.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace cvpt;

namespace {

std::vector<ConvergencePoint> table_points() {
    const double b0[] = {0.742751023, 0.764570478, 0.758783545, 0.762843684, 0.762849959};
    std::vector<ConvergencePoint> pts;
    for (int n = 1; n <= 5; ++n) {
        pts.push_back({static_cast<double>(n), relative_deviation(b0[n - 1], kB0Reference)});
    }
    return pts;
}

} // namespace

TEST_CASE("relative deviation") {
    CHECK(relative_deviation(0.5799, kB0Reference) == doctest::Approx(0.2399).epsilon(1e-3));
    CHECK(relative_deviation(kB0Reference, kB0Reference) == 0);
    CHECK(relative_deviation(0.742751023, kB0Reference) == doctest::Approx(0.02635).epsilon(1e-3));
    CHECK(relative_deviation(0.8, 0.5) == doctest::Approx(0.6));
    CHECK_THROWS_AS(relative_deviation(1, 0), domain_error);
}

TEST_CASE("regressor") {
    CHECK(convergence_regressor(1) == 1);
    CHECK(convergence_regressor(32) == doctest::Approx(8));
}

TEST_CASE("exact linear data") {
    std::vector<ConvergencePoint> pts;
    for (int n = 1; n <= 8; ++n) {
        pts.push_back({static_cast<double>(n), std::exp(-2 * std::pow(n, 0.6) + 1)});
    }
    const ConvergenceFit fit = fit_convergence(pts);
    CHECK(fit.slope == doctest::Approx(-2).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(1).epsilon(1e-12));
    CHECK(fit.slope_stderr < 1e-10);
    CHECK(fit.intercept_stderr < 1e-10);
    CHECK(fit.points.size() == pts.size());
}

TEST_CASE("published table values reproduce the published fit") {
    const ConvergenceFit fit = fit_convergence(table_points());
    CHECK(std::fabs(fit.slope + 5.8) < 0.05);
    CHECK(std::fabs(fit.slope_stderr - 1.6) < 0.1);
    CHECK(std::fabs(fit.intercept - 3.0) < 0.1);
    CHECK(std::fabs(fit.intercept_stderr - 3.0) < 0.1);
}

TEST_CASE("fit against a hand-rolled normal-equation oracle") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> noise(-0.3, 0.3);
    std::vector<ConvergencePoint> pts;
    for (int n = 1; n <= 12; ++n) {
        pts.push_back({static_cast<double>(n), std::exp(-0.9 * std::pow(n, 0.6) - 1.5 + noise(rng))});
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(pts.size());
    for (const auto& p : pts) {
        const double x = std::pow(p.order, 0.6), y = std::log(p.deviation);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double det = m * sxx - sx * sx;
    const double a = (m * sxy - sx * sy) / det;
    const double c = (sxx * sy - sx * sxy) / det;
    double rss = 0;
    for (const auto& p : pts) {
        const double r = std::log(p.deviation) - a * std::pow(p.order, 0.6) - c;
        rss += r * r;
    }
    const double s2 = rss / (m - 2);
    const ConvergenceFit fit = fit_convergence(pts);
    CHECK(fit.slope == doctest::Approx(a).epsilon(1e-10));
    CHECK(fit.intercept == doctest::Approx(c).epsilon(1e-10));
    CHECK(fit.slope_stderr == doctest::Approx(std::sqrt(s2 * m / det)).epsilon(1e-8));
    CHECK(fit.intercept_stderr == doctest::Approx(std::sqrt(s2 * sxx / det)).epsilon(1e-8));
}

TEST_CASE("invariances") {
    auto pts = table_points();
    const ConvergenceFit base = fit_convergence(pts);

    std::reverse(pts.begin(), pts.end());
    std::swap(pts[1], pts[3]);
    const ConvergenceFit shuffled = fit_convergence(pts);
    CHECK(shuffled.slope == doctest::Approx(base.slope).epsilon(1e-12));
    CHECK(shuffled.intercept == doctest::Approx(base.intercept).epsilon(1e-12));

    for (auto& p : pts) {
        p.deviation *= 10;
    }
    const ConvergenceFit scaled = fit_convergence(pts);
    CHECK(scaled.slope == doctest::Approx(base.slope).epsilon(1e-12));
    CHECK(scaled.slope_stderr == doctest::Approx(base.slope_stderr).epsilon(1e-10));
    CHECK(scaled.intercept == doctest::Approx(base.intercept + std::log(10.0)).epsilon(1e-12));
}

TEST_CASE("preconditions") {
    auto pts = table_points();
    pts.resize(2);
    CHECK_THROWS_AS(fit_convergence(pts), argument_error);
    auto zero = table_points();
    zero[2].deviation = 0;
    CHECK_THROWS_AS(fit_convergence(zero), domain_error);
}
