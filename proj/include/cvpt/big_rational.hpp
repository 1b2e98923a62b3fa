#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace cvpt {

/// Exact rational number of unbounded size, always kept in lowest terms
/// with a positive denominator.
class BigRational {
public:
    BigRational() = default;
    BigRational(long value) : value_(value) {}            // NOLINT(google-explicit-constructor)
    BigRational(int value) : value_(static_cast<long>(value)) {} // NOLINT(google-explicit-constructor)
    BigRational(long numerator, long denominator);
    /// Parses decimal numerator and denominator strings (arbitrary size).
    BigRational(const std::string& numerator, const std::string& denominator);
    explicit BigRational(const mpq_class& value);

    static BigRational parse(const std::string& text); // "a" or "a/b"

    std::string numerator_str() const { return value_.get_num().get_str(); }
    std::string denominator_str() const { return value_.get_den().get_str(); }
    std::string str() const;

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    int sign() const { return sgn(value_); }
    bool is_integer() const { return value_.get_den() == 1; }

    double to_double() const { return value_.get_d(); }
    long double to_long_double() const;

    BigRational operator-() const { return BigRational(mpq_class(-value_)); }
    BigRational inverse() const;
    BigRational abs() const { return BigRational(mpq_class(::abs(value_))); }
    BigRational pow(int exponent) const;

    BigRational& operator+=(const BigRational& rhs) { value_ += rhs.value_; return *this; }
    BigRational& operator-=(const BigRational& rhs) { value_ -= rhs.value_; return *this; }
    BigRational& operator*=(const BigRational& rhs) { value_ *= rhs.value_; return *this; }
    BigRational& operator/=(const BigRational& rhs);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

inline BigRational halve(const BigRational& q) { return q / BigRational(2); }

} // namespace cvpt
