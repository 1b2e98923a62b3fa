#include "cvpt/bender_wu.hpp"

#include "cvpt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cvpt {

GaussRational EnergyCoefficients::at(int k) const {
    if (k == 0) {
        return BigRational(1, 2);
    }
    if (k < 0 || k > order()) {
        return {};
    }
    return eps_[static_cast<std::size_t>(k - 1)];
}

GroundStateSeries ground_state_series(int order) {
    if (order < 1) {
        throw argument_error("perturbation order must be at least 1, got " + std::to_string(order));
    }
    WaveCorrectionTable c(order);
    std::vector<GaussRational> eps;
    eps.reserve(static_cast<std::size_t>(order));

    const GaussRational i = GaussRational::i();
    c.set(1, 1, -i);
    c.set(1, 3, -i * BigRational(1, 3));
    eps.emplace_back(0);

    for (int k = 2; k <= order; ++k) {
        // c_m^(k) needs c_{m+1}^(k), c_{m+2}^(k): descend in m.
        for (int m = k + 2; m >= 1; --m) {
            GaussRational value = c.at(k, m + 2) * BigRational((m + 2) * (m + 1), 2 * m);
            GaussRational conv;
            for (int l = 1; l < k; ++l) {
                // c_n^(l) vanishes for n > l+2, c_{m+2-n}^(k-l) for m+2-n > k-l+2.
                const int n_lo = std::max(1, m - k + l);
                const int n_hi = std::min(m + 1, l + 2);
                for (int n = n_lo; n <= n_hi; ++n) {
                    const GaussRational& a = c.at(l, n);
                    const GaussRational& b = c.at(k - l, m + 2 - n);
                    if (a.is_zero() || b.is_zero()) {
                        continue;
                    }
                    conv += a * b * BigRational(static_cast<long>(n) * (m + 2 - n));
                }
            }
            value += conv * BigRational(1, 2 * m);
            c.set(k, m, std::move(value));
        }
        GaussRational e = -c.at(k, 2);
        GaussRational cross;
        for (int l = 1; l < k; ++l) {
            cross += c.at(l, 1) * c.at(k - l, 1);
        }
        e -= cross * BigRational(1, 2);
        eps.push_back(std::move(e));
    }
    return {std::move(c), EnergyCoefficients(std::move(eps))};
}

double dimensionful_energy(const EnergyCoefficients& eps, int order, double hbar, double omega, double g) {
    if (!(omega > 0.0)) {
        throw domain_error("frequency must be positive");
    }
    if (order < 0 || order > eps.order()) {
        throw argument_error("requested order " + std::to_string(order) + " exceeds the available series");
    }
    const double coupling = hbar * g * g / std::pow(omega, 5);
    double sum = 0.5;
    double power = 1.0;
    for (int k = 1; 2 * k <= order; ++k) {
        power *= coupling;
        sum += power * eps.at(2 * k).re().to_double();
    }
    return hbar * omega * sum;
}

} // namespace cvpt
