#pragma once

#include "cvpt/gauss_rational.hpp"
#include "cvpt/wave_table.hpp"

#include <cstddef>
#include <vector>

namespace cvpt {

/// Coefficients c_m^(k) of the wave-function exponent
///   phi_k(x) = sum_{m=1}^{k+2} c_m^(k) x^m
/// for the ground state of  w^2 x^2/2 + i g x^3  (dimensionless x and g).
using WaveCorrectionTable = WaveTable<GaussRational>;

/// Dimensionless energy coefficients eps_1..eps_K of
///   E = hbar w (1/2 + sum_k g^k eps_k).
class EnergyCoefficients {
public:
    EnergyCoefficients() = default;
    explicit EnergyCoefficients(std::vector<GaussRational> eps) : eps_(std::move(eps)) {}

    int order() const { return static_cast<int>(eps_.size()); }
    /// eps_k for k >= 1; eps_0 is the harmonic 1/2. Zero beyond the order.
    GaussRational at(int k) const;
    const std::vector<GaussRational>& values() const { return eps_; }

    friend bool operator==(const EnergyCoefficients&, const EnergyCoefficients&) = default;

private:
    std::vector<GaussRational> eps_; // eps_[k-1]
};

struct GroundStateSeries {
    WaveCorrectionTable wave;
    EnergyCoefficients energy;
};

/// Bender-Wu recursion through order K (K >= 1).
GroundStateSeries ground_state_series(int order);

/// hbar w [1/2 + sum_{k=1}^{floor(K/2)} (hbar g^2 / w^5)^k eps_{2k}] in floating point.
/// Uses coefficients up to eps_K; K = 0 gives the harmonic ground state.
double dimensionful_energy(const EnergyCoefficients& eps, int order, double hbar, double omega, double g);

} // namespace cvpt
