#include "cvpt/effective_potential.hpp"

#include "cvpt/binomial.hpp"
#include "cvpt/errors.hpp"
#include "cvpt/truncated_series.hpp"

#include <algorithm>
#include <string>

namespace cvpt {

namespace {

BackgroundPoly times_x(const BackgroundPoly& p, std::size_t power = 1) {
    if (p.is_zero()) {
        return p;
    }
    std::vector<GaussRational> c(power);
    c.insert(c.end(), p.coefficients().begin(), p.coefficients().end());
    return BackgroundPoly(std::move(c));
}

BackgroundPoly scaled(const BackgroundPoly& p, const BigRational& s) { return p * GaussRational(s); }

// Composes sum_j p_j x^j with a truncated series x, by Horner's rule.
TruncatedSeries<GaussRational> compose(const BackgroundPoly& p, const TruncatedSeries<GaussRational>& x) {
    TruncatedSeries<GaussRational> acc(x.order());
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * x;
        acc[0] += *it;
    }
    return acc;
}

TruncatedSeries<GaussRational> shift(const TruncatedSeries<GaussRational>& s, int power) {
    TruncatedSeries<GaussRational> out(s.order());
    for (int n = 0; n + power <= s.order(); ++n) {
        out[static_cast<std::size_t>(n + power)] = s[static_cast<std::size_t>(n)];
    }
    return out;
}

} // namespace

const BackgroundPoly& EffectivePotentialSeries::at(int k) const {
    static const BackgroundPoly zero;
    if (k < 1 || k > order()) {
        return zero;
    }
    return v_[static_cast<std::size_t>(k - 1)];
}

VeffSeries veff_series(int order) {
    if (order < 1) {
        throw argument_error("perturbation order must be at least 1, got " + std::to_string(order));
    }
    const GaussRational i = GaussRational::i();
    const BackgroundPoly x{GaussRational(0), GaussRational(1)};

    BackgroundWaveTable c(order);
    std::vector<BackgroundPoly> v;
    v.reserve(static_cast<std::size_t>(order));

    c.set(1, 1, BackgroundPoly{i * BigRational(1, 2), GaussRational(0), i * BigRational(2)});
    c.set(1, 2, BackgroundPoly{GaussRational(0), -i * BigRational(1, 2)});
    c.set(1, 3, BackgroundPoly{-i * BigRational(1, 3)});
    v.push_back(BackgroundPoly{GaussRational(0), i * BigRational(3, 2), GaussRational(0), i});

    for (int k = 2; k <= order; ++k) {
        for (int m = k + 2; m >= 2; --m) {
            BackgroundPoly value = scaled(c.at(k, m + 2), BigRational((m + 2) * (m + 1), 2 * m)) +
                                   scaled(times_x(c.at(k, m + 1)), BigRational(m + 1, m));
            BackgroundPoly conv;
            for (int l = 1; l < k; ++l) {
                const int n_lo = std::max(1, m - k + l);
                const int n_hi = std::min(m + 1, l + 2);
                for (int n = n_lo; n <= n_hi; ++n) {
                    const BackgroundPoly& a = c.at(l, n);
                    const BackgroundPoly& b = c.at(k - l, m + 2 - n);
                    if (a.is_zero() || b.is_zero()) {
                        continue;
                    }
                    conv += scaled(a * b, BigRational(static_cast<long>(n) * (m + 2 - n)));
                }
            }
            value += scaled(conv, BigRational(1, 2 * m));
            c.set(k, m, std::move(value));
        }

        BackgroundPoly mixed;  // sum_l c_2^(k-l) c_1^(l) + c_1^(k-l) c_2^(l)
        BackgroundPoly square; // sum_l c_1^(l) c_1^(k-l)
        for (int l = 1; l < k; ++l) {
            mixed += c.at(k - l, 2) * c.at(l, 1) + c.at(k - l, 1) * c.at(l, 2);
            square += c.at(l, 1) * c.at(k - l, 1);
        }
        const BackgroundPoly& c2 = c.at(k, 2);
        const BackgroundPoly& c3 = c.at(k, 3);
        BackgroundPoly vk = -c2 - scaled(times_x(c3), BigRational(3)) - scaled(times_x(c2, 2), BigRational(2)) -
                            times_x(mixed) - scaled(square, BigRational(1, 2));
        BackgroundPoly c1 = scaled(c3, BigRational(3)) + scaled(times_x(c2), BigRational(2)) + vk.derivative() + mixed;
        c.set(k, 1, std::move(c1));
        v.push_back(std::move(vk));
    }
    return {std::move(c), EffectivePotentialSeries(std::move(v))};
}

std::vector<DimensionfulTerm> g_expansion(const EffectivePotentialSeries& series, int order) {
    if (order < 0 || order > series.order()) {
        throw argument_error("g-expansion order " + std::to_string(order) + " exceeds the available series");
    }
    std::vector<DimensionfulTerm> terms;
    terms.push_back({GaussRational(BigRational(1, 2)), 0, 0, 1, 1});
    terms.push_back({GaussRational(BigRational(1, 2)), 0, 2, 0, 2});
    for (int k = 1; k <= order; ++k) {
        const auto& coeffs = series.at(k).coefficients();
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            if (coeffs[j].is_zero()) {
                continue;
            }
            const int diff = k - static_cast<int>(j);
            if (diff % 2 != 0) {
                throw domain_error("g^" + std::to_string(k) + " X^" + std::to_string(j) +
                                   " carries a half-integer power of hbar");
            }
            // hbar w g^k (hbar/w^5)^{k/2} X^j (w/hbar)^{j/2}
            terms.push_back({coeffs[j], k, static_cast<int>(j), 1 + diff / 2,
                             1 + (static_cast<int>(j) - 5 * k) / 2});
        }
    }
    return terms;
}

std::string to_string(const DimensionfulTerm& term) {
    std::vector<std::string> num;
    std::vector<std::string> den;
    auto factor = [&](const std::string& symbol, int power) {
        if (power == 0) {
            return;
        }
        const int a = power < 0 ? -power : power;
        std::string f = a == 1 ? symbol : symbol + "^" + std::to_string(a);
        (power > 0 ? num : den).push_back(std::move(f));
    };
    factor("g", term.g_power);
    factor("hbar", term.hbar_power);
    factor("X", term.x_power);
    factor("w", term.omega_power);

    std::string coeff = term.coeff.str();
    if (!term.coeff.is_real() && !term.coeff.is_imaginary()) {
        coeff = "(" + coeff + ")";
    }
    std::string out;
    if (num.empty()) {
        out = coeff;
    } else {
        out = coeff == "1" ? "" : (coeff == "-1" ? "-" : coeff + "*");
        for (std::size_t n = 0; n < num.size(); ++n) {
            out += (n ? "*" : "") + num[n];
        }
    }
    for (const auto& d : den) {
        out += "/" + d;
    }
    return out;
}

const BigRational& LoopExpansion::at(int l) const {
    if (l < 1 || l > loops()) {
        throw argument_error("loop order " + std::to_string(l) + " not available");
    }
    return r_[static_cast<std::size_t>(l - 1)];
}

LoopExpansion loop_coefficients(const EffectivePotentialSeries& series, int loops) {
    if (loops < 1) {
        throw argument_error("loop count must be at least 1, got " + std::to_string(loops));
    }
    if (series.order() < 2 * loops - 2) {
        throw argument_error(std::to_string(loops) + " loops need the series through order " +
                             std::to_string(2 * loops - 2));
    }
    std::vector<BigRational> r{BigRational(1, 2)};
    for (int l = 2; l <= loops; ++l) {
        const GaussRational c = series.coeff(2 * (l - 1), 0);
        if (!c.is_real()) {
            throw domain_error("constant term of V_" + std::to_string(2 * (l - 1)) + " is not real");
        }
        r.push_back(c.re());
    }
    return LoopExpansion(std::move(r));
}

LoopExpansion loop_coefficients(int loops) {
    if (loops < 1) {
        throw argument_error("loop count must be at least 1, got " + std::to_string(loops));
    }
    return loop_coefficients(veff_series(std::max(1, 2 * loops - 2)).potential, loops);
}

bool LoopConsistencyReport::all_passed() const {
    return std::all_of(cells.begin(), cells.end(), [](const LoopCell& c) { return c.passed; });
}

LoopConsistencyReport loop_consistency_check(const EffectivePotentialSeries& series, const LoopExpansion& loops,
                                             int max_loop, int max_x_power) {
    LoopConsistencyReport report;
    const GaussRational six_i = GaussRational::i() * BigRational(6);
    for (int l = 1; l <= std::min(max_loop, loops.loops()); ++l) {
        const BigRational half_power(LoopExpansion::wtilde_power(l), 2);
        GaussRational six_i_pow(1);
        for (int j = 0; j <= max_x_power; ++j) {
            const int k = LoopExpansion::g_power(l) + j;
            if (k > series.order()) {
                break;
            }
            LoopCell cell;
            cell.loop = l;
            cell.x_power = j;
            cell.g_order = k;
            cell.expected = GaussRational(loops.at(l) * half_binomial(half_power, static_cast<unsigned>(j))) * six_i_pow;
            // g^0 X^0 is the harmonic 1/2 outside the V_k sum.
            cell.actual = k == 0 ? GaussRational(BigRational(1, 2)) : series.coeff(k, j);
            cell.passed = cell.expected == cell.actual;
            report.cells.push_back(std::move(cell));
            six_i_pow *= six_i;
        }
    }
    return report;
}

std::vector<std::pair<int, int>> unassigned_cells(const EffectivePotentialSeries& series) {
    std::vector<std::pair<int, int>> out;
    for (int k = 1; k <= series.order(); ++k) {
        const auto& coeffs = series.at(k).coefficients();
        for (std::size_t jj = 0; jj < coeffs.size(); ++jj) {
            const int j = static_cast<int>(jj);
            if (coeffs[jj].is_zero() || (k == 1 && j == 3)) {
                continue;
            }
            if ((k - j) % 2 != 0 || j > k) {
                out.emplace_back(k, j);
            }
        }
    }
    return out;
}

BigRational PerturbativeExtremum::hbar_coefficient(int n) const {
    if (n < 0) {
        throw argument_error("negative hbar order");
    }
    if (n == 0) {
        return background.empty() ? BigRational(0) : background[0].im();
    }
    const auto idx = static_cast<std::size_t>(2 * n - 1);
    if (idx >= background.size()) {
        throw argument_error("hbar order " + std::to_string(n) + " not available");
    }
    if (!background[idx].is_imaginary()) {
        throw domain_error("extremal background is not purely imaginary at order " + std::to_string(n));
    }
    return background[idx].im();
}

PerturbativeExtremum perturbative_extremum(const EffectivePotentialSeries& series, int order) {
    if (order < 0 || order > series.order()) {
        throw argument_error("extremum order " + std::to_string(order) + " exceeds the available series");
    }
    using Series = TruncatedSeries<GaussRational>;
    // Zeroth order: the harmonic part X^2/2 is extremal at X_0 = 0, and its curvature
    // there is the coefficient of the new unknown in every higher order.
    const BackgroundPoly harmonic{GaussRational(BigRational(1, 2)), GaussRational(0), GaussRational(BigRational(1, 2))};
    const GaussRational pivot = harmonic.derivative().derivative().eval(GaussRational(0));
    if (pivot.is_zero()) {
        throw solver_error("vanishing pivot in the perturbative extremum");
    }
    Series x(order);
    auto gradient = [&](const Series& bg) {
        Series grad = bg;
        for (int k = 1; k <= order; ++k) {
            grad += shift(compose(series.at(k).derivative(), bg), k);
        }
        return grad;
    };
    for (int n = 1; n <= order; ++n) {
        // Order n of the gradient is linear in x_n with coefficient `pivot`.
        const Series grad = gradient(x);
        x[static_cast<std::size_t>(n)] = -grad[static_cast<std::size_t>(n)] / pivot;
    }
    Series energy = compose(harmonic, x);
    for (int k = 1; k <= order; ++k) {
        energy += shift(compose(series.at(k), x), k);
    }
    return {x.coefficients(), energy.coefficients()};
}

} // namespace cvpt
