#pragma once

#include "cvpt/errors.hpp"
#include "cvpt/ring_traits.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace cvpt {

/// Power series a_0 + a_1 t + ... + a_N t^N with every coefficient through
/// the truncation order N exact (products drop terms beyond t^N).
template <class Ring>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : coeffs_(checked_size(order)) {}
    TruncatedSeries(int order, std::vector<Ring> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(checked_size(order));
    }

    static TruncatedSeries constant(int order, Ring c) {
        TruncatedSeries s(order);
        s.coeffs_[0] = std::move(c);
        return s;
    }
    /// c * t^power, truncated.
    static TruncatedSeries monomial(int order, Ring c, int power) {
        TruncatedSeries s(order);
        if (power <= order) {
            s.coeffs_[static_cast<std::size_t>(power)] = std::move(c);
        }
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Ring& operator[](std::size_t n) const { return coeffs_[n]; }
    Ring& operator[](std::size_t n) { return coeffs_[n]; }
    const std::vector<Ring>& coefficients() const { return coeffs_; }

    TruncatedSeries operator-() const {
        TruncatedSeries r = *this;
        for (auto& c : r.coeffs_) {
            c = -c;
        }
        return r;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& rhs) {
        check_order(rhs);
        for (std::size_t n = 0; n < coeffs_.size(); ++n) {
            coeffs_[n] += rhs.coeffs_[n];
        }
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& rhs) {
        check_order(rhs);
        for (std::size_t n = 0; n < coeffs_.size(); ++n) {
            coeffs_[n] -= rhs.coeffs_[n];
        }
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_order(b);
        const std::size_t size = a.coeffs_.size();
        TruncatedSeries out(a.order());
        for (std::size_t i = 0; i < size; ++i) {
            if (is_zero(a.coeffs_[i])) {
                continue;
            }
            for (std::size_t j = 0; i + j < size; ++j) {
                if (!is_zero(b.coeffs_[j])) {
                    out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
                }
            }
        }
        return out;
    }
    friend TruncatedSeries operator*(TruncatedSeries a, const Ring& s) {
        for (auto& c : a.coeffs_) {
            c = c * s;
        }
        return a;
    }
    TruncatedSeries& operator*=(const TruncatedSeries& rhs) { return *this = *this * rhs; }

    /// Multiplicative inverse; the constant term must be exactly one.
    TruncatedSeries inverse() const {
        require_unit_constant("inverse");
        TruncatedSeries inv(order());
        inv.coeffs_[0] = coeffs_[0];
        for (std::size_t n = 1; n < coeffs_.size(); ++n) {
            Ring acc{};
            for (std::size_t k = 1; k <= n; ++k) {
                if (!is_zero(coeffs_[k])) {
                    acc += coeffs_[k] * inv.coeffs_[n - k];
                }
            }
            inv.coeffs_[n] = -acc;
        }
        return inv;
    }

    /// Principal square root; the constant term must be exactly one.
    TruncatedSeries sqrt() const {
        require_unit_constant("sqrt");
        TruncatedSeries s(order());
        s.coeffs_[0] = coeffs_[0];
        for (std::size_t n = 1; n < coeffs_.size(); ++n) {
            Ring acc = coeffs_[n];
            for (std::size_t k = 1; k < n; ++k) {
                acc -= s.coeffs_[k] * s.coeffs_[n - k];
            }
            s.coeffs_[n] = halve(acc);
        }
        return s;
    }

    /// Integer power; negative exponents go through inverse().
    TruncatedSeries pow(int exponent) const {
        if (exponent < 0) {
            return inverse().pow(-exponent);
        }
        TruncatedSeries result(order());
        result.coeffs_[0] = Ring(1);
        TruncatedSeries base = *this;
        while (exponent > 0) {
            if (exponent & 1) {
                result = result * base;
            }
            exponent >>= 1;
            if (exponent > 0) {
                base = base * base;
            }
        }
        return result;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    static std::size_t checked_size(int order) {
        if (order < 0) {
            throw argument_error("truncation order must be non-negative");
        }
        return static_cast<std::size_t>(order) + 1;
    }
    void check_order(const TruncatedSeries& other) const {
        if (other.coeffs_.size() != coeffs_.size()) {
            throw argument_error("truncated series of different orders");
        }
    }
    void require_unit_constant(const char* op) const {
        if (!is_one(coeffs_[0])) {
            throw domain_error(std::string("series ") + op + " requires constant term 1");
        }
    }

    std::vector<Ring> coeffs_;
};

} // namespace cvpt
