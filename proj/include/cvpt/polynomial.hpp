#pragma once

#include "cvpt/gauss_rational.hpp"
#include "cvpt/ring_traits.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace cvpt {

/// Dense univariate polynomial; coefficient j multiplies x^j.
/// Trailing zero coefficients are never stored, so the zero polynomial is empty.
template <class Ring>
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(Ring constant) : coeffs_{std::move(constant)} { trim(); } // NOLINT(google-explicit-constructor)
    Polynomial(std::initializer_list<Ring> coeffs) : coeffs_(coeffs) { trim(); }
    explicit Polynomial(std::vector<Ring> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(Ring c, std::size_t power) {
        std::vector<Ring> v(power + 1);
        v[power] = std::move(c);
        return Polynomial(std::move(v));
    }

    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && cvpt::is_one(coeffs_[0]); }

    /// Coefficient of x^j; zero beyond the degree.
    Ring coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Ring{}; }
    const std::vector<Ring>& coefficients() const { return coeffs_; }

    Ring operator()(const Ring& x) const { return eval(x); }
    Ring eval(const Ring& x) const {
        Ring acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) {
            return {};
        }
        std::vector<Ring> d(coeffs_.size() - 1);
        for (std::size_t j = 1; j < coeffs_.size(); ++j) {
            d[j - 1] = coeffs_[j] * Ring(static_cast<long>(j));
        }
        return Polynomial(std::move(d));
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.coeffs_) {
            c = -c;
        }
        return r;
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(rhs.coeffs_.size());
        }
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            coeffs_[j] += rhs.coeffs_[j];
        }
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) {
            coeffs_.resize(rhs.coeffs_.size());
        }
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            coeffs_[j] -= rhs.coeffs_[j];
        }
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<Ring> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (cvpt::is_zero(a.coeffs_[i])) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (!cvpt::is_zero(b.coeffs_[j])) {
                    out[i + j] += a.coeffs_[i] * b.coeffs_[j];
                }
            }
        }
        return Polynomial(std::move(out));
    }
    friend Polynomial operator*(Polynomial a, const Ring& s) {
        for (auto& c : a.coeffs_) {
            c = c * s;
        }
        a.trim();
        return a;
    }
    friend Polynomial operator*(const Ring& s, Polynomial a) { return std::move(a) * s; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && cvpt::is_zero(coeffs_.back())) {
            coeffs_.pop_back();
        }
    }

    std::vector<Ring> coeffs_;
};

template <class Ring>
bool is_zero(const Polynomial<Ring>& p) { return p.is_zero(); }
template <class Ring>
bool is_one(const Polynomial<Ring>& p) { return p.is_one(); }
template <class Ring>
Polynomial<Ring> halve(const Polynomial<Ring>& p) {
    std::vector<Ring> c = p.coefficients();
    for (auto& x : c) {
        x = halve(x);
    }
    return Polynomial<Ring>(std::move(c));
}

/// Polynomial in the dimensionless background variable.
using BackgroundPoly = Polynomial<GaussRational>;

/// Human-readable form such as "3/2*i*X + i*X^3".
std::string to_string(const BackgroundPoly& p, const std::string& variable = "X");

} // namespace cvpt
