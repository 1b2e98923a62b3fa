#include "cvpt/bender_wu.hpp"
#include "cvpt/effective_potential.hpp"
#include "cvpt/errors.hpp"
#include "cvpt/truncated_series.hpp"
#include "cvpt/verification.hpp"
#include "cvpt/vpt.hpp"

#include "random_gen.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <functional>

using namespace cvpt;

namespace {

const EnergyCoefficients& eps() {
    static const EnergyCoefficients e = ground_state_series(40).energy;
    return e;
}

const LoopExpansion& loops() {
    static const LoopExpansion r = loop_coefficients(veff_series(10).potential, 6);
    return r;
}

BigRational eps_even(int k) { return k == 0 ? BigRational(1, 2) : eps().at(2 * k).re(); }

// sum_{n<=N} s_n a^n
template <class Ring>
Ring evaluate_series(const TruncatedSeries<Ring>& s, const Ring& a) {
    Ring total(0), power(1);
    for (int n = 0; n <= s.order(); ++n) {
        total += s[static_cast<std::size_t>(n)] * power;
        power *= a;
    }
    return total;
}

// E(w) with w -> W sqrt(1 + alpha r), alpha r = (w^2 - W^2)/W^2, expanded in alpha to order N.
BigRational substituted_energy(int order, const BigRational& alpha, const BigRational& omega,
                               const BigRational& big_omega, const BigRational& hbar) {
    const BigRational r = (omega * omega - big_omega * big_omega) / (alpha * big_omega * big_omega);
    const auto root = TruncatedSeries<BigRational>(order, {BigRational(1), r}).sqrt();
    TruncatedSeries<BigRational> total(order);
    for (int k = 0; k <= order; ++k) {
        const auto term = root.pow(1 - 5 * k) * (eps_even(k) * hbar.pow(k + 1) * big_omega.pow(1 - 5 * k));
        total += TruncatedSeries<BigRational>::monomial(order, BigRational(1), k) * term;
    }
    return evaluate_series(total, alpha);
}

// Loop sum with w^2 = W^2 + (w^2 - W^2) and the shift counted as one order in hbar.
long double substituted_veff(int order, long double y, long double big_omega, const VeffCouplings& c) {
    const long double base = big_omega * big_omega + 6 * c.g * y;
    const long double shift = (c.omega * c.omega - big_omega * big_omega) / base;
    const auto root = TruncatedSeries<long double>(order, {1.0L, shift}).sqrt();
    TruncatedSeries<long double> total(order);
    for (int l = 1; l <= order; ++l) {
        const int p = 1 - 5 * (l - 1);
        const long double scale = loops().at(l).to_long_double() * std::pow(c.hbar, static_cast<long double>(l)) *
                                  std::pow(c.g, 2.0L * (l - 1)) * std::pow(base, p / 2.0L);
        total += TruncatedSeries<long double>::monomial(order, 1.0L, l) * (root.pow(p) * scale);
    }
    return -c.omega * c.omega * y * y / 2 - c.g * y * y * y + evaluate_series(total, 1.0L);
}

double bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    REQUIRE(flo * f(hi) < 0);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

long double eval_radical_series(const std::vector<RadicalNumber>& c, long double t) {
    long double total = 0, power = 1;
    for (const auto& x : c) {
        total += x.to_long_double() * power;
        power *= t;
    }
    return total;
}

RadicalNumber root(int radicand, int power, long num = 1, long den = 1) {
    return RadicalNumber::root_power(5, BigRational(radicand), power) * RadicalNumber(BigRational(num, den));
}

} // namespace

TEST_CASE("trick series reduces to the plain series at W = w") {
    for (int n = 1; n <= 6; ++n) {
        const TrickSeries t(eps(), n);
        for (const auto& [alpha, omega, hbar] :
             {std::tuple{BigRational(1, 3), BigRational(2), BigRational(1)},
              std::tuple{BigRational(5), BigRational(3, 7), BigRational(2, 5)}}) {
            BigRational plain;
            for (int k = 0; k <= n; ++k) {
                plain += eps_even(k) * hbar.pow(k + 1) * alpha.pow(k) * omega.pow(1 - 5 * k);
            }
            CHECK(t.evaluate_exact(alpha, omega, omega, hbar) == plain);
        }
    }
}

TEST_CASE("trick series against brute-force substitution") {
    testing::Generator gen(11);
    for (int n = 1; n <= 3; ++n) {
        const TrickSeries t(eps(), n);
        for (int trial = 0; trial < 6; ++trial) {
            const BigRational alpha = gen.rational().abs() + BigRational(1, 7);
            const BigRational omega = gen.rational().abs() + BigRational(1, 3);
            const BigRational big = gen.rational().abs() + BigRational(1, 5);
            const BigRational hbar = gen.rational().abs() + BigRational(1, 2);
            CHECK(t.evaluate_exact(alpha, omega, big, hbar) == substituted_energy(n, alpha, omega, big, hbar));
        }
        CHECK(t.coeff(0, 0) == BigRational(1, 2));
        CHECK(t.coeff(0, 1) == BigRational(1, 4));
        CHECK(t.coeff(1, 0) == BigRational(11, 8));
    }
    const TrickSeries t2(eps(), 2);
    CHECK(t2.coeff(1, 1) == BigRational(11, 8) * BigRational(-2));
    CHECK(t2.coeff(0, 2) == BigRational(-1, 16));
    CHECK_THROWS_AS(t2.coeff(2, 1), argument_error);
}

TEST_CASE("floating evaluation agrees with the exact one") {
    const TrickSeries t(eps(), 5);
    const BigRational alpha(7, 3), omega(1), big(9, 4);
    const long double exact = t.evaluate_exact(alpha, omega, big).to_long_double();
    CHECK(static_cast<double>(t.evaluate(7.0L / 3, 1, 2.25L)) == doctest::Approx(static_cast<double>(exact)).epsilon(1e-15));
}

TEST_CASE("first-order strong-coupling profile") {
    const StrongCouplingFunction f(eps(), 1);
    REQUIRE(f.coefficients().size() == 2);
    CHECK(f.coefficients()[0] == BigRational(1, 4));
    CHECK(f.coefficients()[1] == BigRational(11, 8));
    for (long double w : {0.7L, 1.3L, 2.0L, 5.5L}) {
        CHECK(static_cast<double>(f.value(w)) == doctest::Approx(static_cast<double>(w / 4 + 11 / (8 * std::pow(w, 4.0L)))));
        CHECK(static_cast<double>(f.d1(w)) == doctest::Approx(static_cast<double>(0.25L - 5.5L / std::pow(w, 5.0L))));
        CHECK(static_cast<double>(f.d2(w)) == doctest::Approx(static_cast<double>(27.5L / std::pow(w, 6.0L))));
    }
}

TEST_CASE("strong-coupling coefficients follow from the trick series") {
    for (int n = 1; n <= 6; ++n) {
        const TrickSeries t(eps(), n);
        const StrongCouplingFunction f(eps(), n);
        for (int k = 0; k <= n; ++k) {
            BigRational a;
            for (int j = 0; j <= n - k; ++j) {
                a += t.coeff(k, j) * BigRational(j % 2 ? -1 : 1);
            }
            CHECK(f.coefficients()[static_cast<std::size_t>(k)] == a);
        }
    }
}

TEST_CASE("tricked effective potential against brute-force substitution") {
    testing::Generator gen(5);
    for (int n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            const VeffCouplings c{gen.uniform(0.5, 2), gen.uniform(0, 2), gen.uniform(0.2, 3)};
            const TrickedVeff v(loops(), n, c);
            const long double y = gen.uniform(0.05, 2), big = gen.uniform(0.1, 3);
            REQUIRE(v.in_domain(y, big));
            const long double expected = substituted_veff(n, y, big, c);
            CHECK(std::fabs(static_cast<double>(v.value(y, big) - expected)) <
                  1e-12 * std::max(1.0, std::fabs(static_cast<double>(expected))));
        }
    }
}

TEST_CASE("tricked effective potential reduces to the loop sum at W = w") {
    const VeffCouplings c{1, 1.5, 0.8};
    const TrickedVeff v(loops(), 5, c);
    const long double y = 0.4;
    long double loop_sum = -c.omega * c.omega * y * y / 2 - c.g * y * y * y;
    for (int l = 1; l <= 5; ++l) {
        loop_sum += loops().at(l).to_long_double() * std::pow(c.g, 2.0L * (l - 1)) *
                    std::pow(c.omega * c.omega + 6 * c.g * y, (1 - 5 * (l - 1)) / 2.0L);
    }
    CHECK(static_cast<double>(v.value(y, c.omega)) == doctest::Approx(static_cast<double>(loop_sum)).epsilon(1e-15));
    CHECK(v.in_domain(-0.1L, 0.5L) == false);
}

TEST_CASE("jet derivatives against finite differences") {
    const TrickedVeff v(loops(), 5, {1, 0.7L, 1.2L});
    const long double h = 1e-5L;
    for (const auto& [y, w] : {std::pair{0.5L, 1.1L}, std::pair{1.3L, 0.4L}, std::pair{0.2L, 2.0L}}) {
        const Jet2 j = v.jet(y, w);
        const auto f = [&](long double a, long double b) { return v.value(a, b); };
        CHECK(static_cast<double>(j.v) == doctest::Approx(static_cast<double>(f(y, w))).epsilon(1e-15));
        CHECK(static_cast<double>(j.dy) == doctest::Approx(static_cast<double>((f(y + h, w) - f(y - h, w)) / (2 * h))).epsilon(1e-6));
        CHECK(static_cast<double>(j.dw) == doctest::Approx(static_cast<double>((f(y, w + h) - f(y, w - h)) / (2 * h))).epsilon(1e-6));
        CHECK(static_cast<double>(j.dyy) ==
              doctest::Approx(static_cast<double>((f(y + h, w) - 2 * f(y, w) + f(y - h, w)) / (h * h))).epsilon(1e-5));
        CHECK(static_cast<double>(j.dww) ==
              doctest::Approx(static_cast<double>((f(y, w + h) - 2 * f(y, w) + f(y, w - h)) / (h * h))).epsilon(1e-5));
        CHECK(static_cast<double>(j.dyw) ==
              doctest::Approx(static_cast<double>((f(y + h, w + h) - f(y + h, w - h) - f(y - h, w + h) + f(y - h, w - h)) /
                                                  (4 * h * h)))
                  .epsilon(1e-5));
    }
}

TEST_CASE("first-order optima in closed form") {
    const VptSolution naive = naive_b0(eps(), 1);
    CHECK(std::pow(naive.omega_var, 5) == doctest::Approx(22).epsilon(1e-12));
    CHECK(naive.b0 == doctest::Approx(5.0 / 16 * std::pow(22.0, 0.2)).epsilon(1e-12));
    CHECK(naive.criticality == Criticality::extremum);

    const VptSolution veff = veff_b0(loops(), 1);
    REQUIRE(veff.y.has_value());
    CHECK(veff.omega_var == 0);
    CHECK(std::pow(*veff.y, 5) == doctest::Approx(1.0 / 24).epsilon(1e-12));
    CHECK(veff.b0 == doctest::Approx(5.0 / 12 * std::pow(18.0, 0.2)).epsilon(1e-12));
    for (double r : veff.residuals) {
        CHECK(std::fabs(r) < 1e-12);
    }
}

TEST_CASE("naive candidates agree with a grid oracle") {
    for (int n = 2; n <= 6; ++n) {
        const StrongCouplingFunction f(eps(), n);
        NaiveOptions o;
        const auto cands = naive_candidates(f, o);
        const auto extrema = grid_pms_oracle([&](double w) { return static_cast<double>(f.value(w)); }, o.lo, o.hi, 20000);
        const auto turning = grid_pms_oracle([&](double w) { return static_cast<double>(f.d1(w)); }, o.lo, o.hi, 20000);
        std::vector<double> ours_e, ours_t;
        for (const auto& c : cands) {
            (c.criticality == Criticality::extremum ? ours_e : ours_t).push_back(c.omega);
        }
        REQUIRE(ours_e.size() == extrema.size());
        REQUIRE(ours_t.size() == turning.size());
        for (std::size_t i = 0; i < extrema.size(); ++i) {
            CHECK(ours_e[i] == doctest::Approx(extrema[i]).epsilon(1e-7));
        }
        for (std::size_t i = 0; i < turning.size(); ++i) {
            CHECK(ours_t[i] == doctest::Approx(turning[i]).epsilon(1e-7));
        }
    }
    const VptSolution s2 = naive_b0_sequence(eps(), 2).back().solution.value();
    CHECK(s2.criticality == Criticality::turning_point);
    CHECK(s2.omega_var == doctest::Approx(1.7378740849).epsilon(1e-9));
    CHECK(s2.b0 == doctest::Approx(0.677578834).epsilon(1e-8));
}

TEST_CASE("effective-potential stationary points satisfy both conditions") {
    for (int n = 1; n <= 5; ++n) {
        const TrickedVeff v(loops(), n);
        for (const auto& c : veff_stationary_points(v)) {
            REQUIRE(c.y.has_value());
            const Jet2 j = v.jet(*c.y, c.omega);
            CHECK(std::fabs(static_cast<double>(j.dy)) < 1e-10);
            if (c.omega > 0) {
                CHECK(std::fabs(static_cast<double>(j.dw)) < 1e-10);
            }
            CHECK(c.value == doctest::Approx(static_cast<double>(j.v)));
        }
    }
}

TEST_CASE("effective-potential sequence") {
    const auto seq = veff_b0_sequence(loops(), 5);
    REQUIRE(seq.size() == 5);
    const double expected[] = {0.742751024153, 0.768806950548, 0.758783547091, 0.762843682324, 0.76284995888};
    for (int n = 0; n < 5; ++n) {
        REQUIRE(seq[static_cast<std::size_t>(n)].solution.has_value());
        CHECK(seq[static_cast<std::size_t>(n)].solution->b0 == doctest::Approx(expected[n]).epsilon(1e-10));
    }
    VeffOptions interior;
    interior.selection = VeffSelection::interior_first;
    CHECK(veff_b0(loops(), 2, interior).b0 == doctest::Approx(0.76416).epsilon(1e-4));
}

TEST_CASE("order-one strong-coupling expansions are exact") {
    const auto naive = subleading_order1();
    REQUIRE(naive.parameter.size() == 3);
    REQUIRE(naive.energy.size() == 3);
    CHECK(naive.parameter[0] == root(22, 1));
    CHECK(naive.parameter[1] == root(22, 4, 1, 110));
    CHECK(naive.parameter[2] == root(22, 2, 1, 550));
    CHECK(naive.energy[0] == root(22, 1, 5, 16));
    CHECK(naive.energy[1] == root(22, 4, 1, 88));
    CHECK(naive.energy[2] == root(22, 2, -1, 880));

    const auto veff = veff_strong_coupling_X1();
    REQUIRE(veff.parameter.size() == 3);
    CHECK(veff.parameter[0] == root(18, 2, 1, 6));
    CHECK(veff.parameter[1] == RadicalNumber(BigRational(-2, 15)));
    CHECK(veff.parameter[2] == root(18, 3, 1, 225));
    CHECK(veff.energy[0] == root(18, 1, 5, 12));
    CHECK(veff.energy[1] == root(18, 4, -1, 72));
    CHECK(veff.energy[2] == root(18, 2, 1, 90));
    CHECK(static_cast<double>(root(24, 1).to_long_double()) ==
          doctest::Approx(static_cast<double>(root(18, -2, 6).to_long_double())).epsilon(1e-15));
}

TEST_CASE("order-one expansions match numerical solutions at large coupling") {
    const double g = 1e4;
    const long double t = std::pow(static_cast<long double>(g), -0.8L);
    const long double scale = std::pow(static_cast<long double>(g), 0.4L);

    // plain variant, hbar = w = 1, alpha = g^2
    const TrickSeries trick(eps(), 1);
    const auto energy = [&](double w) { return static_cast<double>(trick.evaluate(g * g, 1, w)); };
    const double h = 1e-6;
    const double w_opt =
        bisect([&](double w) { return (energy(w * (1 + h)) - energy(w * (1 - h))) / (2 * h * w); }, 10, 500);
    const auto naive = subleading_order1();
    const long double w_scale = std::pow(static_cast<long double>(g) * g, 0.2L);
    CHECK(w_opt / w_scale == doctest::Approx(static_cast<double>(eval_radical_series(naive.parameter, t))).epsilon(1e-6));
    CHECK(energy(w_opt) / scale == doctest::Approx(static_cast<double>(eval_radical_series(naive.energy, t))).epsilon(1e-6));

    // effective-potential variant
    const TrickedVeff v(loops(), 1, {1, 1, g});
    const VptSolution s = veff_solve(v);
    REQUIRE(s.y.has_value());
    const auto x1 = veff_strong_coupling_X1();
    CHECK(*s.y * std::pow(g, 0.2) == doctest::Approx(static_cast<double>(eval_radical_series(x1.parameter, t))).epsilon(1e-6));
    CHECK(s.b0 / scale == doctest::Approx(static_cast<double>(eval_radical_series(x1.energy, t))).epsilon(1e-6));
}

TEST_CASE("first-order background equation on the imaginary slice") {
    // X + w^2/(3 i g) + hbar / (2 sqrt(6 i g) X^{3/2}) = 0 at X = -i y, principal branches
    using cplx = std::complex<double>;
    for (const auto& [hbar, w, g] : {std::tuple{1.0, 1.0, 1.0}, std::tuple{1.0, 0.5, 3.0}, std::tuple{2.0, 1.0, 0.3}}) {
        const double y = bisect(
            [&](double y) { return -w * w * y - 3 * g * y * y + 3 * g * hbar / (2 * std::sqrt(6 * g * y)); }, 1e-6, 10);
        const cplx x(0, -y);
        const cplx i(0, 1);
        const cplx residual = x + w * w / (3.0 * i * g) + hbar / (2.0 * std::sqrt(6.0 * i * g) * std::pow(x, 1.5));
        CHECK(std::abs(residual) < 1e-12);
    }
}

TEST_CASE("invalid arguments") {
    CHECK_THROWS_AS(TrickSeries(eps(), -1), argument_error);
    CHECK_THROWS_AS(TrickSeries(eps(), 21), argument_error);
    CHECK_THROWS_AS(TrickedVeff(loops(), 7), argument_error);
    NaiveOptions bad;
    bad.lo = 3;
    bad.hi = 1;
    CHECK_THROWS_AS(naive_b0(eps(), 2, bad), argument_error);
}
