#pragma once

#include "cvpt/big_rational.hpp"

#include <complex>
#include <iosfwd>
#include <string>

namespace cvpt {

/// Exact complex number re + im*i with rational parts.
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(BigRational re) : re_(std::move(re)) {} // NOLINT(google-explicit-constructor)
    GaussRational(int re) : re_(re) {}                    // NOLINT(google-explicit-constructor)
    GaussRational(long re) : re_(re) {}                   // NOLINT(google-explicit-constructor)
    GaussRational(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRational i() { return {BigRational(0), BigRational(1)}; }
    /// i^k for any integer k.
    static GaussRational i_pow(int k);

    const BigRational& re() const { return re_; }
    const BigRational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_imaginary() const { return re_.is_zero(); }

    GaussRational conj() const { return {re_, -im_}; }
    /// |z|^2 as an exact rational.
    BigRational norm() const { return re_ * re_ + im_ * im_; }
    GaussRational inverse() const;

    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }
    std::string str() const;

    GaussRational operator-() const { return {-re_, -im_}; }

    GaussRational& operator+=(const GaussRational& rhs) {
        re_ += rhs.re_;
        im_ += rhs.im_;
        return *this;
    }
    GaussRational& operator-=(const GaussRational& rhs) {
        re_ -= rhs.re_;
        im_ -= rhs.im_;
        return *this;
    }
    GaussRational& operator*=(const GaussRational& rhs);
    GaussRational& operator*=(const BigRational& rhs) {
        re_ *= rhs;
        im_ *= rhs;
        return *this;
    }
    GaussRational& operator/=(const GaussRational& rhs) { return *this *= rhs.inverse(); }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator*(GaussRational a, const BigRational& b) { return a *= b; }
    friend GaussRational operator*(const BigRational& a, GaussRational b) { return b *= a; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

    friend bool operator==(const GaussRational&, const GaussRational&) = default;

private:
    BigRational re_;
    BigRational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussRational& z);

inline GaussRational halve(const GaussRational& z) { return z * BigRational(1, 2); }

} // namespace cvpt
