#pragma once

#include "cvpt/big_rational.hpp"
#include "cvpt/gauss_rational.hpp"
#include "cvpt/polynomial.hpp"
#include "cvpt/wave_table.hpp"

#include <string>
#include <vector>

namespace cvpt {

/// c_m^(k) as polynomials in the rescaled background X = X_phys sqrt(w/hbar).
using BackgroundWaveTable = WaveTable<BackgroundPoly>;

/// V_1(X) .. V_K(X) of
///   V_eff = hbar w [1/2 + X^2/2 + sum_k g^k V_k(X)]
/// with g the dimensionless coupling g sqrt(hbar/w^5).
class EffectivePotentialSeries {
public:
    EffectivePotentialSeries() = default;
    explicit EffectivePotentialSeries(std::vector<BackgroundPoly> v) : v_(std::move(v)) {}

    int order() const { return static_cast<int>(v_.size()); }
    /// V_k for 1 <= k <= order; zero polynomial otherwise.
    const BackgroundPoly& at(int k) const;
    /// Coefficient of g^k X^j.
    GaussRational coeff(int k, int j) const { return at(k).coeff(static_cast<std::size_t>(j)); }
    const std::vector<BackgroundPoly>& polys() const { return v_; }

    friend bool operator==(const EffectivePotentialSeries&, const EffectivePotentialSeries&) = default;

private:
    std::vector<BackgroundPoly> v_; // v_[k-1]
};

struct VeffSeries {
    BackgroundWaveTable wave;
    EffectivePotentialSeries potential;
};

/// Background-field recursion through order K (K >= 1).
VeffSeries veff_series(int order);

/// One term  coeff * g^g_power * X^x_power * hbar^hbar_power * w^omega_power  of the
/// effective potential in physical units.
struct DimensionfulTerm {
    GaussRational coeff;
    int g_power = 0;
    int x_power = 0;
    int hbar_power = 0;
    int omega_power = 0;

    friend bool operator==(const DimensionfulTerm&, const DimensionfulTerm&) = default;
};

/// Physical-unit expansion in powers of g through g^K, including the g^0 terms
/// hbar w/2 and w^2 X^2/2. Terms are ordered by g power, then X power.
std::vector<DimensionfulTerm> g_expansion(const EffectivePotentialSeries& series, int order);

/// Renders e.g. "-27/4*i*g^3*hbar*X^3/w^6".
std::string to_string(const DimensionfulTerm& term);

/// Loop coefficients r_1..r_L with  V^(l)(X) = r_l g^{2(l-1)} wt^{1-5(l-1)},  wt = sqrt(w^2 + 6 i g X).
class LoopExpansion {
public:
    LoopExpansion() = default;
    explicit LoopExpansion(std::vector<BigRational> r) : r_(std::move(r)) {}

    int loops() const { return static_cast<int>(r_.size()); }
    /// r_l for 1 <= l <= loops.
    const BigRational& at(int l) const;
    const std::vector<BigRational>& values() const { return r_; }
    /// Exponent 1 - 5(l-1) of wt in the l-loop term.
    static int wtilde_power(int l) { return 1 - 5 * (l - 1); }
    static int g_power(int l) { return 2 * (l - 1); }

    friend bool operator==(const LoopExpansion&, const LoopExpansion&) = default;

private:
    std::vector<BigRational> r_; // r_[l-1]
};

/// Reads r_l off the constant term of V_{2(l-1)}; needs series order >= 2L-2.
LoopExpansion loop_coefficients(const EffectivePotentialSeries& series, int loops);
LoopExpansion loop_coefficients(int loops);

/// One cell of the loop/background cross-check: coefficient of X^j in V_k against the
/// j-th Taylor coefficient of r_l wt^{1-5(l-1)} in powers of 6 i g X / w^2.
struct LoopCell {
    int loop = 0;
    int x_power = 0;
    int g_order = 0;
    GaussRational expected;
    GaussRational actual;
    bool passed = false;
};

struct LoopConsistencyReport {
    std::vector<LoopCell> cells;
    bool all_passed() const;
};

/// Checks every (l, j) with l <= L, j <= max_x_power and 2(l-1)+j <= series order.
LoopConsistencyReport loop_consistency_check(const EffectivePotentialSeries& series, const LoopExpansion& loops,
                                             int max_loop, int max_x_power);

/// Cells (k, j) of the double series whose value is not explained by any loop order:
/// nonzero coefficients with k - j odd, other than the classical i X^3 at k = 1.
std::vector<std::pair<int, int>> unassigned_cells(const EffectivePotentialSeries& series);

/// Perturbative extremum of the effective potential. In dimensionless units the
/// background solves X + sum_k g^k V_k'(X) = 0 order by order.
struct PerturbativeExtremum {
    /// Coefficients of g^n in the extremal dimensionless background, n = 0..K.
    std::vector<GaussRational> background;
    /// Coefficients of g^n in E / (hbar w), n = 0..K (the n = 0 entry is 1/2).
    std::vector<GaussRational> energy;

    /// Coefficient of hbar^n in the physical background X_e = i (X_0 + hbar X_1 + ...):
    /// X_n = value * g^{2n-1} / w^{5n-2}. Returns the rational value of X_n.
    BigRational hbar_coefficient(int n) const;
    /// Highest n with X_n available.
    int max_hbar_order() const { return static_cast<int>(background.size()) / 2; }
};

PerturbativeExtremum perturbative_extremum(const EffectivePotentialSeries& series, int order);

} // namespace cvpt
