#pragma once

#include <vector>

namespace cvpt {

struct ConvergencePoint {
    double order = 0;
    double deviation = 0;
};

/// ln(deviation) = slope * N^{3/5} + intercept, by ordinary least squares.
struct ConvergenceFit {
    double slope = 0;
    double intercept = 0;
    double slope_stderr = 0;
    double intercept_stderr = 0;
    std::vector<ConvergencePoint> points;
};

/// |b - b_ref| / b_ref
double relative_deviation(double b, double b_ref);

/// The regressor N^{3/5}.
double convergence_regressor(double order);

/// Needs at least three points with positive deviations.
ConvergenceFit fit_convergence(const std::vector<ConvergencePoint>& points);

} // namespace cvpt
