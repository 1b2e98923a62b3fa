#pragma once

#include <functional>
#include <vector>

namespace cvpt {

/// Dense matrix of x^3 in the harmonic-oscillator basis |0>..|n_max>, x = (a + a^+)/sqrt(2).
class OscillatorBasisOperator {
public:
    explicit OscillatorBasisOperator(int n_max);

    int cutoff() const { return n_max_; }
    double operator()(int n, int m) const { return m_[index(n, m)]; }

private:
    std::size_t index(int n, int m) const {
        return static_cast<std::size_t>(n) * static_cast<std::size_t>(n_max_ + 1) + static_cast<std::size_t>(m);
    }

    int n_max_;
    std::vector<double> m_;
};

/// Rayleigh-Schroedinger energy corrections E_1..E_K of H0 + lambda i x^3, H0 = diag(n + 1/2),
/// for the ground state; needs n_max >= 3K. Returns the real parts.
std::vector<double> rs_energy_series(int order, int n_max);

/// Stationary points of a profile in [lo, hi] from a uniform scan of its central-difference
/// derivative, refined by bisection.
std::vector<double> grid_pms_oracle(const std::function<double(double)>& profile, double lo, double hi,
                                    int resolution);

} // namespace cvpt
