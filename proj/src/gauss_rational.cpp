#include "cvpt/gauss_rational.hpp"

#include "cvpt/errors.hpp"

#include <ostream>

namespace cvpt {

GaussRational GaussRational::i_pow(int k) {
    switch (((k % 4) + 4) % 4) {
    case 0: return {BigRational(1), BigRational(0)};
    case 1: return {BigRational(0), BigRational(1)};
    case 2: return {BigRational(-1), BigRational(0)};
    default: return {BigRational(0), BigRational(-1)};
    }
}

GaussRational& GaussRational::operator*=(const GaussRational& rhs) {
    // Recursion coefficients are almost always purely real or purely imaginary.
    if (rhs.im_.is_zero()) {
        return *this *= rhs.re_;
    }
    if (rhs.re_.is_zero()) {
        BigRational re = -(im_ * rhs.im_);
        im_ = re_ * rhs.im_;
        re_ = std::move(re);
        return *this;
    }
    BigRational re = re_ * rhs.re_ - im_ * rhs.im_;
    im_ = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    return *this;
}

GaussRational GaussRational::inverse() const {
    if (is_zero()) {
        throw domain_error("division by zero Gaussian rational");
    }
    const BigRational n = norm();
    return {re_ / n, -im_ / n};
}

std::string GaussRational::str() const {
    if (im_.is_zero()) {
        return re_.str();
    }
    auto imag_part = [](const BigRational& q) {
        if (q.is_one()) {
            return std::string("i");
        }
        if (q == BigRational(-1)) {
            return std::string("-i");
        }
        return q.str() + "*i";
    };
    if (re_.is_zero()) {
        return imag_part(im_);
    }
    if (im_.sign() < 0) {
        return re_.str() + " - " + imag_part(-im_);
    }
    return re_.str() + " + " + imag_part(im_);
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << z.str(); }

} // namespace cvpt
