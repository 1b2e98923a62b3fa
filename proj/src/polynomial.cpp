#include "cvpt/polynomial.hpp"

namespace cvpt {

std::string to_string(const BackgroundPoly& p, const std::string& variable) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    const auto& c = p.coefficients();
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j].is_zero()) {
            continue;
        }
        std::string coeff = c[j].str();
        if (!c[j].is_real() && !c[j].is_imaginary()) {
            coeff = "(" + coeff + ")";
        }
        std::string term;
        if (j == 0) {
            term = coeff;
        } else {
            const std::string power = j == 1 ? variable : variable + "^" + std::to_string(j);
            term = coeff == "1" ? power : (coeff == "-1" ? "-" + power : coeff + "*" + power);
        }
        if (out.empty()) {
            out = term;
        } else if (term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

} // namespace cvpt
