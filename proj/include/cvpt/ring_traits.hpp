#pragma once

#include "cvpt/big_rational.hpp"
#include "cvpt/gauss_rational.hpp"

namespace cvpt {

// Free-function hooks so the generic containers work over exact rings and doubles alike.

inline bool is_zero(const BigRational& q) { return q.is_zero(); }
inline bool is_zero(const GaussRational& z) { return z.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(long double x) { return x == 0.0L; }

inline bool is_one(const BigRational& q) { return q.is_one(); }
inline bool is_one(const GaussRational& z) { return z.is_one(); }
inline bool is_one(double x) { return x == 1.0; }
inline bool is_one(long double x) { return x == 1.0L; }

inline double halve(double x) { return 0.5 * x; }
inline long double halve(long double x) { return 0.5L * x; }

} // namespace cvpt
