#include "cvpt/vpt.hpp"

#include "cvpt/binomial.hpp"
#include "cvpt/errors.hpp"
#include "cvpt/truncated_series.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

namespace cvpt {

namespace {

using Real = long double;

BigRational real_part(const GaussRational& z, int k) {
    if (!z.is_real()) {
        throw domain_error("eps_" + std::to_string(k) + " is not real");
    }
    return z.re();
}

std::vector<Real> log_grid(Real lo, Real hi, int n) {
    std::vector<Real> x(static_cast<std::size_t>(n));
    const Real ratio = std::log(hi / lo);
    for (int i = 0; i < n; ++i) {
        x[static_cast<std::size_t>(i)] = lo * std::exp(ratio * i / (n - 1));
    }
    x.back() = hi;
    return x;
}

std::vector<Real> linear_grid(Real lo, Real hi, int n) {
    std::vector<Real> x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        x[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    }
    return x;
}

// Bisection on a sign change, then Newton polish kept inside the bracket.
Real refine_root(const std::function<Real(Real)>& f, const std::function<Real(Real)>& df, Real a, Real b, Real tol) {
    Real fa = f(a);
    for (int it = 0; it < 400 && (b - a) > tol * std::max(std::fabs(a), std::fabs(b)); ++it) {
        const Real m = (a + b) / 2;
        const Real fm = f(m);
        if (fm == 0) {
            return m;
        }
        if ((fm < 0) == (fa < 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Real x = (a + b) / 2;
    if (df) {
        for (int it = 0; it < 3; ++it) {
            const Real d = df(x);
            if (d == 0 || !std::isfinite(d)) {
                break;
            }
            const Real next = x - f(x) / d;
            if (!(next >= a && next <= b) || std::fabs(f(next)) > std::fabs(f(x))) {
                break;
            }
            x = next;
        }
    }
    return x;
}

std::vector<Real> grid_roots(const std::function<Real(Real)>& f, const std::function<Real(Real)>& df,
                             const std::vector<Real>& xs, Real tol) {
    std::vector<Real> roots;
    std::vector<Real> fx(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        fx[i] = f(xs[i]);
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (fx[i] == 0) {
            roots.push_back(xs[i]);
            continue;
        }
        if (i + 1 < xs.size() && fx[i + 1] != 0 && (fx[i] < 0) != (fx[i + 1] < 0) && std::isfinite(fx[i]) &&
            std::isfinite(fx[i + 1])) {
            roots.push_back(refine_root(f, df, xs[i], xs[i + 1], tol));
        }
    }
    return roots;
}

void check_bracket(double lo, double hi, const char* what) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw argument_error(std::string("invalid ") + what + " bracket");
    }
}

} // namespace

// ---------------------------------------------------------------- energy series

TrickSeries::TrickSeries(const EnergyCoefficients& eps, int order) : order_(order) {
    if (order < 0) {
        throw argument_error("trick order must be non-negative");
    }
    if (eps.order() < 2 * order) {
        throw argument_error("order " + std::to_string(order) + " needs eps through " + std::to_string(2 * order));
    }
    c_.resize(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
        const BigRational e = real_part(eps.at(2 * k), 2 * k);
        const BigRational p(1 - 5 * k, 2);
        for (int j = 0; j <= order - k; ++j) {
            c_[static_cast<std::size_t>(k)].push_back(e * half_binomial(p, static_cast<unsigned>(j)));
        }
    }
}

const BigRational& TrickSeries::coeff(int k, int j) const {
    if (k < 0 || j < 0 || k + j > order_) {
        throw argument_error("trick coefficient out of range");
    }
    return c_[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
}

BigRational TrickSeries::evaluate_exact(const BigRational& alpha, const BigRational& omega,
                                        const BigRational& big_omega, const BigRational& hbar) const {
    if (big_omega.is_zero()) {
        throw domain_error("variational frequency must be nonzero");
    }
    const BigRational w2 = big_omega * big_omega;
    const BigRational ratio = (omega * omega - w2) / w2;
    BigRational total;
    for (int k = 0; k <= order_; ++k) {
        BigRational inner;
        BigRational rp(1);
        for (const auto& c : c_[static_cast<std::size_t>(k)]) {
            inner += c * rp;
            rp *= ratio;
        }
        total += inner * hbar.pow(k + 1) * alpha.pow(k) * big_omega.pow(1 - 5 * k);
    }
    return total;
}

long double TrickSeries::evaluate(long double alpha, long double omega, long double big_omega,
                                  long double hbar) const {
    if (big_omega == 0) {
        throw domain_error("variational frequency must be nonzero");
    }
    const Real w2 = big_omega * big_omega;
    const Real ratio = (omega * omega - w2) / w2;
    Real total = 0;
    for (int k = 0; k <= order_; ++k) {
        Real inner = 0;
        Real rp = 1;
        for (const auto& c : c_[static_cast<std::size_t>(k)]) {
            inner += c.to_long_double() * rp;
            rp *= ratio;
        }
        total += inner * std::pow(hbar, k + 1) * std::pow(alpha, k) * std::pow(big_omega, 1 - 5 * k);
    }
    return total;
}

TrickSeries trick_reexpand_energy(const EnergyCoefficients& eps, int order) { return {eps, order}; }

StrongCouplingFunction::StrongCouplingFunction(const EnergyCoefficients& eps, int order) {
    if (order < 1) {
        throw argument_error("VPT order must be at least 1, got " + std::to_string(order));
    }
    const TrickSeries trick(eps, order);
    for (int k = 0; k <= order; ++k) {
        BigRational a;
        for (int j = 0; j <= order - k; ++j) {
            a += j % 2 ? -trick.coeff(k, j) : trick.coeff(k, j);
        }
        af_.push_back(a.to_long_double());
        a_.push_back(std::move(a));
    }
}

long double StrongCouplingFunction::value(long double w) const {
    const Real u = 1 / std::pow(w, 5);
    Real s = 0;
    for (auto it = af_.rbegin(); it != af_.rend(); ++it) {
        s = s * u + *it;
    }
    return w * s;
}

long double StrongCouplingFunction::d1(long double w) const {
    const Real u = 1 / std::pow(w, 5);
    Real s = 0;
    for (std::size_t k = af_.size(); k-- > 0;) {
        s = s * u + af_[k] * (1 - 5 * static_cast<Real>(k));
    }
    return s;
}

long double StrongCouplingFunction::d2(long double w) const {
    const Real u = 1 / std::pow(w, 5);
    Real s = 0;
    for (std::size_t k = af_.size(); k-- > 0;) {
        const Real e = 1 - 5 * static_cast<Real>(k);
        s = s * u + af_[k] * e * (e - 1);
    }
    return s / w;
}

// ---------------------------------------------------------------- effective potential

TrickedVeff::TrickedVeff(const LoopExpansion& loops, int order, VeffCouplings couplings)
    : order_(order), k_(couplings) {
    if (order < 1) {
        throw argument_error("VPT order must be at least 1, got " + std::to_string(order));
    }
    if (loops.loops() < order) {
        throw argument_error("order " + std::to_string(order) + " needs " + std::to_string(order) + " loops");
    }
    if (!(couplings.g > 0) || !(couplings.hbar > 0) || couplings.omega < 0) {
        throw domain_error("couplings need hbar > 0, g > 0 and w >= 0");
    }
    for (int l = 1; l <= order; ++l) {
        const BigRational p(LoopExpansion::wtilde_power(l), 2);
        std::vector<BigRational> row;
        std::vector<long double> rowf;
        for (int j = 0; j <= order - l; ++j) {
            row.push_back(loops.at(l) * half_binomial(p, static_cast<unsigned>(j)));
            rowf.push_back(row.back().to_long_double());
        }
        c_.push_back(std::move(row));
        cf_.push_back(std::move(rowf));
    }
}

const BigRational& TrickedVeff::coeff(int l, int j) const {
    if (l < 1 || j < 0 || l + j > order_) {
        throw argument_error("tricked potential coefficient out of range");
    }
    return c_[static_cast<std::size_t>(l - 1)][static_cast<std::size_t>(j)];
}

bool TrickedVeff::in_domain(long double y, long double big_omega) const {
    return big_omega * big_omega + 6 * k_.g * y > 0;
}

template <class T>
T TrickedVeff::eval(const T& y, const T& big_omega) const {
    const Real w2 = k_.omega * k_.omega;
    const T omega2 = big_omega * big_omega;
    const T wt2 = omega2 + T(6 * k_.g) * y;
    const T shift = T(w2) - omega2;
    T out = T(-w2 / 2) * y * y - T(k_.g) * y * y * y;
    Real prefactor = 1;
    for (int l = 1; l <= order_; ++l) {
        prefactor *= k_.hbar;
        const Real p = static_cast<Real>(LoopExpansion::wtilde_power(l)) / 2;
        T inner(0);
        T shift_pow(1);
        const auto& row = cf_[static_cast<std::size_t>(l - 1)];
        for (std::size_t j = 0; j < row.size(); ++j) {
            inner += T(row[j]) * shift_pow * real_pow(wt2, p - static_cast<Real>(j));
            shift_pow *= shift;
        }
        out += T(prefactor) * inner;
        prefactor *= k_.g * k_.g;
    }
    return out;
}

template long double TrickedVeff::eval<long double>(const long double&, const long double&) const;
template Jet2 TrickedVeff::eval<Jet2>(const Jet2&, const Jet2&) const;

TrickedVeff veff_trick(const LoopExpansion& loops, int order, VeffCouplings couplings) {
    return {loops, order, couplings};
}

// ---------------------------------------------------------------- optimization

std::string to_string(Criticality c) { return c == Criticality::extremum ? "extremum" : "turning_point"; }

std::vector<PmsCandidate> naive_candidates(const StrongCouplingFunction& f, const NaiveOptions& options) {
    check_bracket(options.lo, options.hi, "variational");
    if (!(options.lo > 0)) {
        throw argument_error("variational bracket must be positive");
    }
    if (options.grid < 2) {
        throw argument_error("grid needs at least 2 points");
    }
    const auto xs = log_grid(options.lo, options.hi, options.grid);
    auto d1 = [&](Real w) { return f.d1(w); };
    auto d2 = [&](Real w) { return f.d2(w); };
    std::vector<PmsCandidate> out;
    for (Real w : grid_roots(d1, d2, xs, options.tol)) {
        out.push_back({static_cast<double>(w), std::nullopt, static_cast<double>(f.value(w)), Criticality::extremum,
                       static_cast<double>(f.d2(w))});
    }
    for (Real w : grid_roots(d2, nullptr, xs, options.tol)) {
        out.push_back({static_cast<double>(w), std::nullopt, static_cast<double>(f.value(w)),
                       Criticality::turning_point, static_cast<double>(f.d2(w))});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.omega < b.omega; });
    return out;
}

namespace {

const PmsCandidate* pick_flattest(const std::vector<PmsCandidate>& cands, const StrongCouplingFunction& f) {
    const PmsCandidate* best = nullptr;
    for (const auto& c : cands) {
        if (c.criticality == Criticality::extremum &&
            (!best || std::fabs(c.curvature) < std::fabs(best->curvature))) {
            best = &c;
        }
    }
    if (best) {
        return best;
    }
    Real best_slope = std::numeric_limits<Real>::infinity();
    for (const auto& c : cands) {
        const Real s = std::fabs(f.d1(c.omega));
        if (s < best_slope) {
            best_slope = s;
            best = &c;
        }
    }
    return best;
}

VptSolution naive_solution(const StrongCouplingFunction& f, std::vector<PmsCandidate> cands,
                           std::optional<double> previous, NaiveSelection rule) {
    if (cands.empty()) {
        throw solver_error("no PMS point in the bracket at order " + std::to_string(f.order()));
    }
    const PmsCandidate* chosen = nullptr;
    if (rule == NaiveSelection::continuation && previous) {
        chosen = &*std::min_element(cands.begin(), cands.end(), [&](const auto& a, const auto& b) {
            return std::fabs(a.omega - *previous) < std::fabs(b.omega - *previous);
        });
    } else {
        chosen = pick_flattest(cands, f);
    }
    VptSolution s;
    s.variant = "naive";
    s.order = f.order();
    s.omega_var = chosen->omega;
    s.b0 = chosen->value;
    s.criticality = chosen->criticality;
    s.residuals = {static_cast<double>(chosen->criticality == Criticality::extremum ? f.d1(chosen->omega)
                                                                                   : f.d2(chosen->omega))};
    s.candidates = std::move(cands);
    return s;
}

} // namespace

std::vector<VptOutcome> naive_b0_sequence(const EnergyCoefficients& eps, int max_order, const NaiveOptions& options) {
    if (max_order < 1) {
        throw argument_error("VPT order must be at least 1, got " + std::to_string(max_order));
    }
    std::vector<VptOutcome> out;
    std::optional<double> previous;
    for (int n = 1; n <= max_order; ++n) {
        VptOutcome o;
        o.order = n;
        try {
            const StrongCouplingFunction f(eps, n);
            o.solution = naive_solution(f, naive_candidates(f, options), previous, options.selection);
            previous = o.solution->omega_var;
        } catch (const solver_error& e) {
            o.error = e.what();
        }
        out.push_back(std::move(o));
    }
    return out;
}

VptSolution naive_b0(const EnergyCoefficients& eps, int order, const NaiveOptions& options) {
    auto seq = naive_b0_sequence(eps, order, options);
    if (!seq.back().solution) {
        throw solver_error(seq.back().error);
    }
    return std::move(*seq.back().solution);
}

namespace {

struct Point {
    Real y;
    Real w;
};

bool same_point(const PmsCandidate& c, Real y, Real w, Real tol) {
    return std::fabs(*c.y - y) < tol * (1 + std::fabs(y)) && std::fabs(c.omega - w) < tol * (1 + std::fabs(w));
}

// Damped Newton on a 2D system; F returns residuals and fills the Jacobian.
std::optional<Point> newton2(const std::function<std::array<Real, 2>(Point, std::array<Real, 4>&)>& F,
                             const std::function<bool(Point)>& admissible, Point x, Real tol) {
    std::array<Real, 4> jac{};
    for (int it = 0; it < 100; ++it) {
        const auto r = F(x, jac);
        if (!std::isfinite(r[0]) || !std::isfinite(r[1])) {
            return std::nullopt;
        }
        const Real det = jac[0] * jac[3] - jac[1] * jac[2];
        if (det == 0 || !std::isfinite(det)) {
            return std::nullopt;
        }
        const Real dy = -(jac[3] * r[0] - jac[1] * r[1]) / det;
        const Real dw = -(-jac[2] * r[0] + jac[0] * r[1]) / det;
        Real t = 1;
        Point next{x.y + dy, x.w + dw};
        for (int h = 0; h < 40 && !admissible(next); ++h) {
            t /= 2;
            next = {x.y + t * dy, x.w + t * dw};
        }
        if (!admissible(next)) {
            return std::nullopt;
        }
        const Real step = std::fabs(t * dy) + std::fabs(t * dw);
        x = next;
        if (step <= tol * (1 + std::fabs(x.y) + std::fabs(x.w))) {
            return x;
        }
    }
    return std::nullopt;
}

constexpr Real kStationaryResidual = 1e-9L;
constexpr Real kFlatCurvature = 1e-9L;

PmsCandidate make_candidate(const TrickedVeff& v, Real y, Real w, Criticality c) {
    const Jet2 j = v.jet(y, w);
    return {static_cast<double>(w), static_cast<double>(y), static_cast<double>(j.v), c,
            static_cast<double>(j.dww)};
}

std::vector<Point> seed_grid(const VeffOptions& o, bool include_zero) {
    const auto ys = log_grid(o.y_lo, o.y_hi, o.seeds);
    const Real w_start = include_zero ? static_cast<Real>(o.omega_lo) : std::max<Real>(o.omega_lo, 1e-3L);
    const auto ws = linear_grid(w_start, o.omega_hi, o.seeds);
    std::vector<Point> seeds;
    for (Real y : ys) {
        for (Real w : ws) {
            seeds.push_back({y, w});
        }
    }
    return seeds;
}

void check_veff_options(const VeffOptions& o) {
    check_bracket(o.omega_lo, o.omega_hi, "variational");
    check_bracket(o.y_lo, o.y_hi, "background");
    if (o.omega_lo < 0 || !(o.y_lo > 0)) {
        throw argument_error("brackets must lie in W >= 0, y > 0");
    }
    if (o.seeds < 2 || o.grid < 2) {
        throw argument_error("seed and grid counts must be at least 2");
    }
}

} // namespace

std::vector<PmsCandidate> veff_stationary_points(const TrickedVeff& v, const VeffOptions& options) {
    check_veff_options(options);
    std::vector<PmsCandidate> out;
    // W = 0 is stationary in W by evenness; solve dV/dy = 0 along it.
    if (options.omega_lo == 0) {
        auto fy = [&](Real y) { return v.jet(y, 0).dy; };
        auto fyy = [&](Real y) { return v.jet(y, 0).dyy; };
        for (Real y : grid_roots(fy, fyy, log_grid(options.y_lo, options.y_hi, options.grid), options.tol)) {
            const Jet2 j = v.jet(y, 0);
            out.push_back(make_candidate(
                v, y, 0, std::fabs(j.dww) > kFlatCurvature ? Criticality::extremum : Criticality::turning_point));
        }
    }
    auto gradient = [&](Point p, std::array<Real, 4>& jac) {
        const Jet2 j = v.jet(p.y, p.w);
        jac = {j.dyy, j.dyw, j.dyw, j.dww};
        return std::array<Real, 2>{j.dy, j.dw};
    };
    auto admissible = [&](Point p) { return p.y > 0 && v.in_domain(p.y, p.w); };
    for (const Point& seed : seed_grid(options, false)) {
        const auto root = newton2(gradient, admissible, seed, options.tol);
        if (!root) {
            continue;
        }
        const Real y = root->y;
        const Real w = std::fabs(root->w);
        const Jet2 j = v.jet(y, w);
        if (std::hypot(j.dy, j.dw) > kStationaryResidual || w < 1e-6L || w < options.omega_lo ||
            w > options.omega_hi || y < options.y_lo || y > options.y_hi) {
            continue;
        }
        const bool dup = std::any_of(out.begin(), out.end(), [&](const auto& c) {
            return same_point(c, y, w, 1e-7L) || (c.omega == 0 && w < 1e-4L && same_point(c, y, 0, 1e-4L));
        });
        if (!dup) {
            out.push_back(make_candidate(
                v, y, w, std::fabs(j.dww) > kFlatCurvature ? Criticality::extremum : Criticality::turning_point));
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.omega != b.omega ? a.omega < b.omega : *a.y < *b.y;
    });
    return out;
}

std::vector<PmsCandidate> veff_turning_points(const TrickedVeff& v, const VeffOptions& options) {
    check_veff_options(options);
    auto system = [&](Point p, std::array<Real, 4>& jac) {
        const Jet2 j = v.jet(p.y, p.w);
        // The third derivatives in the Jacobian come from differencing the jet.
        const Real hy = 1e-6L * (1 + std::fabs(p.y));
        const Real hw = 1e-6L * (1 + std::fabs(p.w));
        const Jet2 yp = v.jet(p.y + hy, p.w), ym = v.jet(p.y - hy, p.w);
        const Jet2 wp = v.jet(p.y, p.w + hw), wm = v.jet(p.y, p.w - hw);
        jac = {j.dyy, j.dyw, (yp.dww - ym.dww) / (2 * hy), (wp.dww - wm.dww) / (2 * hw)};
        return std::array<Real, 2>{j.dy, j.dww};
    };
    auto admissible = [&](Point p) {
        const Real h = 2e-6L * (1 + std::fabs(p.y) + std::fabs(p.w));
        return p.y > h && v.in_domain(p.y - h, std::fabs(p.w) - h);
    };
    std::vector<PmsCandidate> out;
    for (const Point& seed : seed_grid(options, true)) {
        const auto root = newton2(system, admissible, seed, std::max<Real>(options.tol, 1e-12L));
        if (!root) {
            continue;
        }
        const Real y = root->y;
        const Real w = std::fabs(root->w);
        const Jet2 j = v.jet(y, w);
        if (std::hypot(j.dy, j.dww) > 1e-7L || w < options.omega_lo || w > options.omega_hi || y < options.y_lo ||
            y > options.y_hi) {
            continue;
        }
        if (std::none_of(out.begin(), out.end(), [&](const auto& c) { return same_point(c, y, w, 1e-6L); })) {
            out.push_back(make_candidate(v, y, w, Criticality::turning_point));
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.omega < b.omega; });
    return out;
}

VptSolution veff_solve(const TrickedVeff& v, const VeffOptions& options) {
    auto cands = veff_stationary_points(v, options);
    auto flattest = [&](auto accept) {
        const PmsCandidate* best = nullptr;
        for (const auto& c : cands) {
            if (c.criticality == Criticality::extremum && accept(c) &&
                (!best || std::fabs(c.curvature) < std::fabs(best->curvature))) {
                best = &c;
            }
        }
        return best;
    };
    const PmsCandidate* chosen = nullptr;
    if (options.selection == VeffSelection::interior_first) {
        chosen = flattest([](const PmsCandidate& c) { return c.omega > 0; });
        if (!chosen) {
            chosen = flattest([](const PmsCandidate& c) { return c.omega == 0; });
        }
    } else {
        chosen = flattest([](const PmsCandidate&) { return true; });
    }
    std::size_t chosen_index = chosen ? static_cast<std::size_t>(chosen - cands.data()) : 0;
    if (!chosen) {
        auto tps = veff_turning_points(v, options);
        if (tps.empty()) {
            throw solver_error("no PMS point in the bracket at order " + std::to_string(v.order()) + " (" +
                               std::to_string(cands.size()) + " degenerate stationary points)");
        }
        const auto slope = [&](const PmsCandidate& c) { return std::fabs(v.jet(*c.y, c.omega).dw); };
        const auto it = std::min_element(tps.begin(), tps.end(),
                                         [&](const auto& a, const auto& b) { return slope(a) < slope(b); });
        chosen_index = cands.size() + static_cast<std::size_t>(it - tps.begin());
        cands.insert(cands.end(), tps.begin(), tps.end());
    }
    const PmsCandidate& c = cands[chosen_index];
    const Jet2 j = v.jet(*c.y, c.omega);
    VptSolution s;
    s.variant = "veff";
    s.order = v.order();
    s.omega_var = c.omega;
    s.y = c.y;
    s.b0 = c.value;
    s.criticality = c.criticality;
    s.residuals = {static_cast<double>(j.dy),
                   static_cast<double>(c.criticality == Criticality::extremum ? j.dw : j.dww)};
    s.candidates = std::move(cands);
    return s;
}

VptSolution veff_b0(const LoopExpansion& loops, int order, const VeffOptions& options) {
    return veff_solve(TrickedVeff(loops, order), options);
}

std::vector<VptOutcome> veff_b0_sequence(const LoopExpansion& loops, int max_order, const VeffOptions& options) {
    if (max_order < 1) {
        throw argument_error("VPT order must be at least 1, got " + std::to_string(max_order));
    }
    std::vector<VptOutcome> out;
    for (int n = 1; n <= max_order; ++n) {
        VptOutcome o;
        o.order = n;
        try {
            o.solution = veff_b0(loops, n, options);
        } catch (const solver_error& e) {
            o.error = e.what();
        }
        out.push_back(std::move(o));
    }
    return out;
}

// ---------------------------------------------------------------- order-1 strong-coupling expansions

namespace {

using RSeries = TruncatedSeries<RadicalNumber>;

RSeries times_t(const RSeries& s) {
    RSeries out(s.order());
    for (int n = s.order(); n > 0; --n) {
        out[static_cast<std::size_t>(n)] = s[static_cast<std::size_t>(n - 1)];
    }
    return out;
}

RSeries reciprocal(const RSeries& s) {
    const RadicalNumber c = s[0].inverse();
    return (s * c).inverse() * c;
}

// Solves residual(x(t)) = 0 order by order; slope is d residual / dx at x0.
RSeries solve_series(const std::function<RSeries(const RSeries&)>& residual, const RadicalNumber& x0,
                     const RadicalNumber& slope, int order) {
    RSeries x = RSeries::constant(order, x0);
    const RadicalNumber inv = slope.inverse();
    for (int n = 1; n <= order; ++n) {
        x[static_cast<std::size_t>(n)] = -(residual(x)[static_cast<std::size_t>(n)] * inv);
    }
    if (!residual(x)[0].is_zero()) {
        throw solver_error("leading strong-coupling equation not satisfied");
    }
    return x;
}

RSeries constant(int order, const BigRational& c) { return RSeries::constant(order, RadicalNumber(c)); }

} // namespace

StrongCouplingExpansion subleading_order1() {
    constexpr int order = 2;
    // E / (hbar w g^{2/5}) = w/4 + t/(4w) + 11/(8 w^4) with W = (hbar g^2)^{1/5} w;
    // stationarity: w^5 - t w^3 - 22 = 0.
    const RadicalNumber w0 = RadicalNumber::root_power(5, BigRational(22), 1);
    auto residual = [&](const RSeries& w) { return w.pow(5) - times_t(w.pow(3)) - constant(order, BigRational(22)); };
    const RSeries w = solve_series(residual, w0, RadicalNumber(5) * w0.pow(4), order);
    const RSeries inv = reciprocal(w);
    const RSeries energy = w * RadicalNumber(BigRational(1, 4)) + times_t(inv) * RadicalNumber(BigRational(1, 4)) +
                           inv.pow(4) * RadicalNumber(BigRational(11, 8));
    return {w.coefficients(), energy.coefficients()};
}

StrongCouplingExpansion veff_strong_coupling_X1() {
    constexpr int order = 2;
    // With y = g^{-1/5} v^2/6 (hbar = w = 1):
    // V / g^{2/5} = -v^6/216 + v/2 - t v^4/72, stationary where -v^5/36 + 1/2 - t v^3/18 = 0.
    const RadicalNumber v0 = RadicalNumber::root_power(5, BigRational(18), 1);
    auto residual = [&](const RSeries& v) {
        return v.pow(5) * RadicalNumber(BigRational(-1, 36)) + constant(order, BigRational(1, 2)) -
               times_t(v.pow(3)) * RadicalNumber(BigRational(1, 18));
    };
    const RSeries v = solve_series(residual, v0, RadicalNumber(BigRational(-5, 36)) * v0.pow(4), order);
    const RSeries x = v * v * RadicalNumber(BigRational(1, 6));
    const RSeries energy = v.pow(6) * RadicalNumber(BigRational(-1, 216)) + v * RadicalNumber(BigRational(1, 2)) -
                           times_t(v.pow(4)) * RadicalNumber(BigRational(1, 72));
    return {x.coefficients(), energy.coefficients()};
}

} // namespace cvpt
