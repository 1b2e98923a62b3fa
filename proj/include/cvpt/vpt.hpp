#pragma once

#include "cvpt/bender_wu.hpp"
#include "cvpt/big_rational.hpp"
#include "cvpt/effective_potential.hpp"
#include "cvpt/jet.hpp"
#include "cvpt/radical_field.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cvpt {

/// Reference value of the leading strong-coupling coefficient b_0.
inline constexpr double kB0Reference = 0.762851773;

// ---------------------------------------------------------------- energy series

/// Re-expanded energy after the square-root trick w -> W sqrt(1 + alpha r):
///   E^(N) = sum_{k<=N} eps_{2k} hbar^{k+1} alpha^k W^{1-5k}
///           sum_{j<=N-k} C((1-5k)/2, j) ((w^2 - W^2)/W^2)^j,   eps_0 = 1/2.
class TrickSeries {
public:
    TrickSeries(const EnergyCoefficients& eps, int order);

    int order() const { return order_; }
    /// eps_{2k} C((1-5k)/2, j) for k + j <= N.
    const BigRational& coeff(int k, int j) const;

    BigRational evaluate_exact(const BigRational& alpha, const BigRational& omega, const BigRational& big_omega,
                               const BigRational& hbar = BigRational(1)) const;
    long double evaluate(long double alpha, long double omega, long double big_omega, long double hbar = 1) const;

private:
    int order_;
    std::vector<std::vector<BigRational>> c_; // c_[k][j]
};

/// Needs eps through order 2N.
TrickSeries trick_reexpand_energy(const EnergyCoefficients& eps, int order);

/// Strong-coupling limit of E^(N): E -> (hbar alpha)^{1/5} f(W) with
///   f(W) = sum_k a_k W^{1-5k},  a_k = eps_{2k} sum_{j<=N-k} C((1-5k)/2, j) (-1)^j.
class StrongCouplingFunction {
public:
    StrongCouplingFunction(const EnergyCoefficients& eps, int order);

    int order() const { return static_cast<int>(a_.size()) - 1; }
    const std::vector<BigRational>& coefficients() const { return a_; }

    long double value(long double w) const;
    long double d1(long double w) const;
    long double d2(long double w) const;

private:
    std::vector<BigRational> a_;
    std::vector<long double> af_;
};

// ---------------------------------------------------------------- effective potential

struct VeffCouplings {
    long double hbar = 1;
    long double omega = 0;
    long double g = 1;
};

/// Tricked loop expansion on the slice X = -i y:
///   V^(N)(y, W) = -w^2 y^2/2 - g y^3
///     + sum_{l<=N} hbar^l r_l g^{2(l-1)} sum_{j<=N-l} C(p_l/2, j) (w^2 - W^2)^j (W^2 + 6 g y)^{p_l/2 - j},
/// p_l = 1 - 5(l-1). Real wherever W^2 + 6 g y > 0.
class TrickedVeff {
public:
    TrickedVeff(const LoopExpansion& loops, int order, VeffCouplings couplings = {});

    int order() const { return order_; }
    const VeffCouplings& couplings() const { return k_; }
    /// r_l C(p_l/2, j) for l + j <= N.
    const BigRational& coeff(int l, int j) const;
    bool in_domain(long double y, long double big_omega) const;

    long double value(long double y, long double big_omega) const { return eval<long double>(y, big_omega); }
    Jet2 jet(long double y, long double big_omega) const {
        return eval<Jet2>(Jet2::var_y(y), Jet2::var_w(big_omega));
    }

private:
    template <class T>
    T eval(const T& y, const T& big_omega) const;

    int order_;
    VeffCouplings k_;
    std::vector<std::vector<BigRational>> c_; // c_[l-1][j]
    std::vector<std::vector<long double>> cf_;
};

TrickedVeff veff_trick(const LoopExpansion& loops, int order, VeffCouplings couplings = {});

// ---------------------------------------------------------------- optimization

enum class Criticality { extremum, turning_point };
std::string to_string(Criticality c);

struct PmsCandidate {
    double omega = 0;
    std::optional<double> y;
    double value = 0;
    Criticality criticality = Criticality::extremum;
    /// Second derivative of the approximant in the variational parameter.
    double curvature = 0;
};

struct VptSolution {
    std::string variant;
    int order = 0;
    double omega_var = 0;
    std::optional<double> y;
    double b0 = 0;
    Criticality criticality = Criticality::extremum;
    /// The stationarity conditions solved, evaluated at the solution.
    std::vector<double> residuals;
    std::vector<PmsCandidate> candidates;
};

/// Result of one order in a scan; failed orders carry the error text.
struct VptOutcome {
    int order = 0;
    std::optional<VptSolution> solution;
    std::string error;
};

enum class NaiveSelection {
    /// Candidate (extremum or turning point) closest to the previous order's choice.
    continuation,
    /// Extremum with the smallest |f''|, else the turning point with the smallest |f'|.
    flattest,
};

struct NaiveOptions {
    double lo = 0.5;
    double hi = 10.0;
    int grid = 4000;
    double tol = 1e-13;
    NaiveSelection selection = NaiveSelection::continuation;
};

/// All extrema and turning points of f in the bracket, ordered by position.
std::vector<PmsCandidate> naive_candidates(const StrongCouplingFunction& f, const NaiveOptions& options = {});

/// Orders 1..N in sequence (continuation needs the previous order).
std::vector<VptOutcome> naive_b0_sequence(const EnergyCoefficients& eps, int max_order,
                                          const NaiveOptions& options = {});
VptSolution naive_b0(const EnergyCoefficients& eps, int order, const NaiveOptions& options = {});

enum class VeffSelection {
    /// Extremum (any W >= 0) with the smallest |d^2 V/dW^2|.
    flattest,
    /// Interior W > 0 extrema first, then W = 0, each by smallest |d^2 V/dW^2|.
    interior_first,
};

struct VeffOptions {
    double omega_lo = 0.0;
    double omega_hi = 3.0;
    double y_lo = 1e-3;
    double y_hi = 3.0;
    int seeds = 24;
    int grid = 4000;
    double tol = 1e-13;
    VeffSelection selection = VeffSelection::flattest;
};

/// Simultaneous stationary points of V^(N) in (y, W): the W = 0 branch and interior points.
std::vector<PmsCandidate> veff_stationary_points(const TrickedVeff& v, const VeffOptions& options = {});
/// Points with dV/dy = 0 and d^2V/dW^2 = 0.
std::vector<PmsCandidate> veff_turning_points(const TrickedVeff& v, const VeffOptions& options = {});

VptSolution veff_solve(const TrickedVeff& v, const VeffOptions& options = {});
/// Strong-coupling normalization hbar = g = 1, w = 0.
VptSolution veff_b0(const LoopExpansion& loops, int order, const VeffOptions& options = {});
std::vector<VptOutcome> veff_b0_sequence(const LoopExpansion& loops, int max_order, const VeffOptions& options = {});

// ---------------------------------------------------------------- order-1 strong-coupling expansions

/// Coefficients of t = g^{-4/5} in the optimal variational parameter and in E / (hbar w g^{2/5}).
struct StrongCouplingExpansion {
    std::vector<RadicalNumber> parameter;
    std::vector<RadicalNumber> energy;
};

/// Plain variant at first order: parameter = W / (hbar g^2)^{1/5}, three terms each.
StrongCouplingExpansion subleading_order1();
/// Effective-potential variant at first order: parameter = i X g^{1/5} sqrt(w/hbar).
StrongCouplingExpansion veff_strong_coupling_X1();

} // namespace cvpt
