#include "cvpt/radical_field.hpp"

#include "cvpt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <utility>

namespace cvpt {

RadicalNumber RadicalNumber::root_power(int degree, const BigRational& radicand, int power) {
    if (degree < 1) {
        throw argument_error("radical degree must be positive");
    }
    if (radicand.sign() <= 0) {
        throw domain_error("radicand must be positive");
    }
    // theta^power = c^q theta^r with power = q*degree + r, 0 <= r < degree
    int q = power / degree;
    int r = power % degree;
    if (r < 0) {
        r += degree;
        --q;
    }
    RadicalNumber x;
    x.degree_ = degree;
    x.radicand_ = radicand;
    x.coeffs_.assign(static_cast<std::size_t>(degree), BigRational(0));
    x.coeffs_[static_cast<std::size_t>(r)] = radicand.pow(q);
    return x;
}

BigRational RadicalNumber::coeff(int k) const {
    return k >= 0 && static_cast<std::size_t>(k) < coeffs_.size() ? coeffs_[static_cast<std::size_t>(k)]
                                                                  : BigRational(0);
}

bool RadicalNumber::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRational& q) { return q.is_zero(); });
}

bool RadicalNumber::is_rational() const {
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        if (!coeffs_[k].is_zero()) {
            return false;
        }
    }
    return true;
}

bool RadicalNumber::is_one() const { return is_rational() && coeff(0).is_one(); }

void RadicalNumber::adopt_field(const RadicalNumber& other) {
    if (other.degree_ == 0) {
        return;
    }
    if (degree_ == 0) {
        degree_ = other.degree_;
        radicand_ = other.radicand_;
        coeffs_.resize(static_cast<std::size_t>(degree_), BigRational(0));
        return;
    }
    if (degree_ != other.degree_ || radicand_ != other.radicand_) {
        throw domain_error("mixing elements of different radical fields");
    }
}

void RadicalNumber::normalize() {
    if (degree_ == 0 && coeffs_.empty()) {
        coeffs_.emplace_back(0);
    }
}

RadicalNumber RadicalNumber::operator-() const {
    RadicalNumber r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

RadicalNumber& RadicalNumber::operator+=(const RadicalNumber& rhs) {
    normalize();
    adopt_field(rhs);
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
        coeffs_[k] += rhs.coeffs_[k];
    }
    return *this;
}

RadicalNumber& RadicalNumber::operator*=(const RadicalNumber& rhs) {
    normalize();
    adopt_field(rhs);
    if (degree_ == 0) {
        coeffs_[0] *= rhs.coeff(0);
        return *this;
    }
    const auto n = static_cast<std::size_t>(degree_);
    std::vector<BigRational> out(n, BigRational(0));
    for (std::size_t a = 0; a < coeffs_.size(); ++a) {
        if (coeffs_[a].is_zero()) {
            continue;
        }
        for (std::size_t b = 0; b < rhs.coeffs_.size(); ++b) {
            if (rhs.coeffs_[b].is_zero()) {
                continue;
            }
            BigRational term = coeffs_[a] * rhs.coeffs_[b];
            std::size_t k = a + b;
            if (k >= n) {
                k -= n;
                term *= radicand_;
            }
            out[k] += term;
        }
    }
    coeffs_ = std::move(out);
    return *this;
}

RadicalNumber RadicalNumber::inverse() const {
    if (is_zero()) {
        throw domain_error("inverse of zero radical number");
    }
    if (degree_ == 0) {
        return RadicalNumber(coeff(0).inverse());
    }
    // Solve M y = e_0 where M is the matrix of multiplication by *this.
    const auto n = static_cast<std::size_t>(degree_);
    std::vector<std::vector<BigRational>> m(n, std::vector<BigRational>(n + 1, BigRational(0)));
    for (std::size_t col = 0; col < n; ++col) {
        RadicalNumber basis = root_power(degree_, radicand_, static_cast<int>(col));
        RadicalNumber prod = *this * basis;
        for (std::size_t row = 0; row < n; ++row) {
            m[row][col] = prod.coeff(static_cast<int>(row));
        }
    }
    m[0][n] = BigRational(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            throw domain_error("singular multiplication matrix in radical field");
        }
        std::swap(m[pivot], m[col]);
        const BigRational inv = m[col][col].inverse();
        for (auto& x : m[col]) {
            x *= inv;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col].is_zero()) {
                continue;
            }
            const BigRational f = m[row][col];
            for (std::size_t k = col; k <= n; ++k) {
                m[row][k] -= f * m[col][k];
            }
        }
    }
    RadicalNumber y = root_power(degree_, radicand_, 0);
    for (std::size_t k = 0; k < n; ++k) {
        y.coeffs_[k] = m[k][n];
    }
    return y;
}

RadicalNumber RadicalNumber::pow(int exponent) const {
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    RadicalNumber result(1);
    result.adopt_field(*this);
    RadicalNumber base = *this;
    while (exponent > 0) {
        if (exponent & 1) {
            result *= base;
        }
        exponent >>= 1;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

long double RadicalNumber::to_long_double() const {
    if (degree_ == 0) {
        return coeff(0).to_long_double();
    }
    const long double theta = std::pow(radicand_.to_long_double(), 1.0L / static_cast<long double>(degree_));
    long double acc = 0.0L;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * theta + it->to_long_double();
    }
    return acc;
}

std::string RadicalNumber::str() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) {
            continue;
        }
        std::string term;
        if (k == 0) {
            term = coeffs_[k].str();
        } else {
            const long g = std::gcd(static_cast<long>(k), static_cast<long>(degree_));
            const std::string root = radicand_.str() + "^(" + std::to_string(static_cast<long>(k) / g) + "/" +
                                     std::to_string(degree_ / g) + ")";
            term = coeffs_[k].is_one() ? root : coeffs_[k].str() + "*" + root;
        }
        if (!out.empty()) {
            out += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
        } else {
            out = term;
        }
    }
    return out.empty() ? "0" : out;
}

bool operator==(const RadicalNumber& a, const RadicalNumber& b) { return (a - b).is_zero(); }

std::ostream& operator<<(std::ostream& os, const RadicalNumber& x) { return os << x.str(); }

} // namespace cvpt
