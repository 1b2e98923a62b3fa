#include "cvpt/verification.hpp"

#include "cvpt/errors.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace cvpt {

OscillatorBasisOperator::OscillatorBasisOperator(int n_max) : n_max_(n_max) {
    if (n_max < 0) {
        throw argument_error("basis cutoff must be non-negative");
    }
    // x couples n to n +- 1, so x^3 on |0>..|n_max> needs states up to n_max + 2.
    const int size = n_max + 3;
    std::vector<std::vector<double>> x(static_cast<std::size_t>(size), std::vector<double>(size, 0.0));
    for (int n = 0; n + 1 < size; ++n) {
        x[n][n + 1] = x[n + 1][n] = std::sqrt((n + 1) / 2.0);
    }
    auto mul = [&](const std::vector<std::vector<double>>& a, const std::vector<std::vector<double>>& b) {
        std::vector<std::vector<double>> c(a.size(), std::vector<double>(a.size(), 0.0));
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t k = 0; k < a.size(); ++k) {
                if (a[i][k] == 0) {
                    continue;
                }
                for (std::size_t j = 0; j < a.size(); ++j) {
                    c[i][j] += a[i][k] * b[k][j];
                }
            }
        }
        return c;
    };
    const auto x3 = mul(mul(x, x), x);
    m_.resize(static_cast<std::size_t>(n_max + 1) * static_cast<std::size_t>(n_max + 1));
    for (int n = 0; n <= n_max; ++n) {
        for (int m = 0; m <= n_max; ++m) {
            m_[index(n, m)] = x3[n][m];
        }
    }
}

std::vector<double> rs_energy_series(int order, int n_max) {
    if (order < 1) {
        throw argument_error("order must be at least 1");
    }
    if (n_max < 3 * order) {
        throw argument_error("basis cutoff " + std::to_string(n_max) + " below 3K = " + std::to_string(3 * order));
    }
    using C = std::complex<double>;
    const OscillatorBasisOperator x3(n_max);
    const std::size_t dim = static_cast<std::size_t>(n_max) + 1;
    const C i(0.0, 1.0);
    auto apply_w = [&](const std::vector<C>& v) {
        std::vector<C> out(dim);
        for (std::size_t n = 0; n < dim; ++n) {
            const std::size_t lo = n >= 3 ? n - 3 : 0;
            const std::size_t hi = std::min(dim - 1, n + 3);
            C acc = 0;
            for (std::size_t m = lo; m <= hi; ++m) {
                acc += x3(static_cast<int>(n), static_cast<int>(m)) * v[m];
            }
            out[n] = i * acc;
        }
        return out;
    };
    std::vector<std::vector<C>> psi{std::vector<C>(dim)};
    psi[0][0] = 1.0;
    std::vector<C> energy{0.5};
    for (int k = 1; k <= order; ++k) {
        const auto wpsi = apply_w(psi[static_cast<std::size_t>(k - 1)]);
        energy.push_back(wpsi[0]);
        std::vector<C> next(dim);
        for (std::size_t n = 1; n < dim; ++n) {
            C rhs = wpsi[n];
            for (int j = 1; j < k; ++j) {
                rhs -= energy[static_cast<std::size_t>(j)] * psi[static_cast<std::size_t>(k - j)][n];
            }
            next[n] = rhs / (0.5 - (static_cast<double>(n) + 0.5));
        }
        psi.push_back(std::move(next));
    }
    std::vector<double> out;
    for (int k = 1; k <= order; ++k) {
        out.push_back(energy[static_cast<std::size_t>(k)].real());
    }
    return out;
}

std::vector<double> grid_pms_oracle(const std::function<double(double)>& profile, double lo, double hi,
                                    int resolution) {
    if (!(lo < hi)) {
        throw argument_error("oracle bracket must satisfy lo < hi");
    }
    if (resolution < 100) {
        throw argument_error("oracle resolution must be at least 100");
    }
    auto deriv = [&](double u) {
        const double h = 1e-6 * std::max(1.0, std::fabs(u));
        return (profile(u + h) - profile(u - h)) / (2 * h);
    };
    std::vector<double> xs(static_cast<std::size_t>(resolution) + 1);
    std::vector<double> ds(xs.size());
    for (std::size_t n = 0; n < xs.size(); ++n) {
        xs[n] = lo + (hi - lo) * static_cast<double>(n) / resolution;
        ds[n] = deriv(xs[n]);
    }
    std::vector<double> roots;
    for (std::size_t n = 0; n < xs.size(); ++n) {
        if (ds[n] == 0) {
            // Isolated exact zero with a sign change across it; plateaus report nothing.
            if (n > 0 && n + 1 < xs.size() && ds[n - 1] != 0 && ds[n + 1] != 0 &&
                (ds[n - 1] < 0) != (ds[n + 1] < 0)) {
                roots.push_back(xs[n]);
            }
            continue;
        }
        if (n + 1 < xs.size() && ds[n + 1] != 0 && (ds[n] < 0) != (ds[n + 1] < 0)) {
            double a = xs[n];
            double b = xs[n + 1];
            double fa = ds[n];
            for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::fabs(a)); ++it) {
                const double m = (a + b) / 2;
                const double fm = deriv(m);
                if ((fm < 0) == (fa < 0)) {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
            }
            roots.push_back((a + b) / 2);
        }
    }
    return roots;
}

} // namespace cvpt
