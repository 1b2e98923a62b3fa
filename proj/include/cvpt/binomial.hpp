#pragma once

#include "cvpt/big_rational.hpp"

namespace cvpt {

/// Generalized binomial coefficient p (p-1) ... (p-j+1) / j! for rational p.
BigRational half_binomial(const BigRational& p, unsigned j);

} // namespace cvpt
