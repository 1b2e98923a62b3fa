#include "cvpt/big_rational.hpp"

#include "cvpt/errors.hpp"

#include <cmath>
#include <ostream>

namespace cvpt {

BigRational::BigRational(long numerator, long denominator) {
    if (denominator == 0) {
        throw domain_error("rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

BigRational::BigRational(const std::string& numerator, const std::string& denominator) {
    mpz_class num, den;
    if (num.set_str(numerator, 10) != 0 || den.set_str(denominator, 10) != 0) {
        throw parse_error("invalid integer in rational '" + numerator + "/" + denominator + "'", 0);
    }
    if (den == 0) {
        throw domain_error("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

BigRational::BigRational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

BigRational BigRational::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        return BigRational(text, "1");
    }
    return BigRational(text.substr(0, slash), text.substr(slash + 1));
}

std::string BigRational::str() const {
    if (is_integer()) {
        return numerator_str();
    }
    return numerator_str() + "/" + denominator_str();
}

long double BigRational::to_long_double() const {
    if (is_zero()) {
        return 0.0L;
    }
    // Form an integer quotient with ~70 significant bits, then rescale.
    mpz_class num = ::abs(value_.get_num());
    mpz_class den = value_.get_den();
    const long bits = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
                      static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
    const long shift = 70 - bits;
    if (shift > 0) {
        num <<= static_cast<mp_bitcnt_t>(shift);
    } else if (shift < 0) {
        den <<= static_cast<mp_bitcnt_t>(-shift);
    }
    mpz_class q = num / den;
    mpz_class hi = q >> 64;
    mpz_class lo = q - (hi << 64);
    const long double mantissa =
        std::ldexp(static_cast<long double>(hi.get_ui()), 64) +
        static_cast<long double>(mpz_get_ui(lo.get_mpz_t()));
    const long double result = std::ldexp(mantissa, static_cast<int>(-shift));
    return sign() < 0 ? -result : result;
}

BigRational BigRational::inverse() const {
    if (is_zero()) {
        throw domain_error("inverse of zero");
    }
    mpq_class inv;
    mpq_inv(inv.get_mpq_t(), value_.get_mpq_t());
    return BigRational(inv);
}

BigRational BigRational::pow(int exponent) const {
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den().get_mpz_t(), static_cast<unsigned long>(exponent));
    return BigRational(mpq_class(num, den));
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
    if (rhs.is_zero()) {
        throw domain_error("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.str(); }

} // namespace cvpt
