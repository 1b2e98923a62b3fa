#include "cvpt/binomial.hpp"

namespace cvpt {

BigRational half_binomial(const BigRational& p, unsigned j) {
    BigRational result(1);
    for (unsigned i = 0; i < j; ++i) {
        result *= (p - BigRational(static_cast<long>(i))) / BigRational(static_cast<long>(i + 1));
    }
    return result;
}

} // namespace cvpt
