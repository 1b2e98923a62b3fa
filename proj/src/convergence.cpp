#include "cvpt/convergence.hpp"

#include "cvpt/errors.hpp"

#include <cmath>
#include <string>

namespace cvpt {

double relative_deviation(double b, double b_ref) {
    if (b_ref == 0) {
        throw domain_error("reference value must be nonzero");
    }
    return std::fabs(b - b_ref) / b_ref;
}

double convergence_regressor(double order) { return std::pow(order, 0.6); }

ConvergenceFit fit_convergence(const std::vector<ConvergencePoint>& points) {
    const std::size_t n = points.size();
    if (n < 3) {
        throw argument_error("convergence fit needs at least 3 points, got " + std::to_string(n));
    }
    // Centered sums keep the normal equations well conditioned.
    long double mx = 0;
    long double my = 0;
    std::vector<long double> x(n);
    std::vector<long double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(points[i].deviation > 0)) {
            throw domain_error("deviation at N = " + std::to_string(points[i].order) + " is not positive");
        }
        x[i] = convergence_regressor(points[i].order);
        y[i] = std::log(static_cast<long double>(points[i].deviation));
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    long double sxx = 0;
    long double sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0) {
        throw domain_error("all points share the same order");
    }
    const long double slope = sxy / sxx;
    const long double intercept = my - slope * mx;
    long double rss = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const long double r = y[i] - intercept - slope * x[i];
        rss += r * r;
    }
    const long double s2 = rss / static_cast<long double>(n - 2);
    ConvergenceFit fit;
    fit.slope = static_cast<double>(slope);
    fit.intercept = static_cast<double>(intercept);
    fit.slope_stderr = static_cast<double>(std::sqrt(s2 / sxx));
    fit.intercept_stderr = static_cast<double>(std::sqrt(s2 * (1.0L / n + mx * mx / sxx)));
    fit.points = points;
    return fit;
}

} // namespace cvpt
