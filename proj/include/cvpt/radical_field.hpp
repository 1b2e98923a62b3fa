#pragma once

#include "cvpt/big_rational.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace cvpt {

/// Exact element of Q(theta) with theta^n = c for a positive rational radicand c,
/// stored as sum_k a_k theta^k, 0 <= k < n. A default-constructed value (or one
/// built from a rational) is a plain rational that adopts the field of whatever
/// it is combined with.
class RadicalNumber {
public:
    RadicalNumber() = default;
    RadicalNumber(BigRational q) : coeffs_{std::move(q)} {} // NOLINT(google-explicit-constructor)
    RadicalNumber(int q) : coeffs_{BigRational(q)} {}       // NOLINT(google-explicit-constructor)
    RadicalNumber(long q) : coeffs_{BigRational(q)} {}      // NOLINT(google-explicit-constructor)

    /// theta^power, power may be negative.
    static RadicalNumber root_power(int degree, const BigRational& radicand, int power);

    int degree() const { return degree_; }
    const BigRational& radicand() const { return radicand_; }
    /// Coefficient of theta^k.
    BigRational coeff(int k) const;

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    RadicalNumber inverse() const;
    RadicalNumber pow(int exponent) const;
    long double to_long_double() const;
    std::string str() const;

    RadicalNumber operator-() const;
    RadicalNumber& operator+=(const RadicalNumber& rhs);
    RadicalNumber& operator-=(const RadicalNumber& rhs) { return *this += -rhs; }
    RadicalNumber& operator*=(const RadicalNumber& rhs);
    RadicalNumber& operator/=(const RadicalNumber& rhs) { return *this *= rhs.inverse(); }

    friend RadicalNumber operator+(RadicalNumber a, const RadicalNumber& b) { return a += b; }
    friend RadicalNumber operator-(RadicalNumber a, const RadicalNumber& b) { return a -= b; }
    friend RadicalNumber operator*(RadicalNumber a, const RadicalNumber& b) { return a *= b; }
    friend RadicalNumber operator/(RadicalNumber a, const RadicalNumber& b) { return a /= b; }
    friend bool operator==(const RadicalNumber& a, const RadicalNumber& b);

private:
    void adopt_field(const RadicalNumber& other);
    void normalize();

    int degree_ = 0; // 0: plain rational
    BigRational radicand_;
    std::vector<BigRational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RadicalNumber& x);

inline bool is_zero(const RadicalNumber& x) { return x.is_zero(); }
inline bool is_one(const RadicalNumber& x) { return x.is_one(); }
inline RadicalNumber halve(const RadicalNumber& x) { return x * RadicalNumber(BigRational(1, 2)); }

} // namespace cvpt
