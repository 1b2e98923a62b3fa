#include "cvpt/big_rational.hpp"
#include "cvpt/binomial.hpp"
#include "cvpt/errors.hpp"
#include "cvpt/gauss_rational.hpp"
#include "cvpt/polynomial.hpp"
#include "cvpt/radical_field.hpp"
#include "cvpt/truncated_series.hpp"

#include "random_gen.hpp"

#include <doctest.h>

#include <cmath>

using namespace cvpt;

namespace {

const GaussRational I = GaussRational::i();

// Ordinary binomial coefficient by Pascal's triangle, independent of half_binomial.
BigRational pascal(int n, int j) {
    std::vector<std::vector<BigRational>> row(static_cast<std::size_t>(n) + 1);
    for (int a = 0; a <= n; ++a) {
        row[static_cast<std::size_t>(a)].assign(static_cast<std::size_t>(a) + 1, BigRational(1));
        for (int b = 1; b < a; ++b) {
            row[a][b] = row[a - 1][b - 1] + row[a - 1][b];
        }
    }
    return row[n][j];
}

} // namespace

TEST_CASE("big rationals stay in lowest terms") {
    BigRational q(6, -8);
    CHECK(q.numerator_str() == "-3");
    CHECK(q.denominator_str() == "4");
    CHECK(BigRational::parse("10/4") == BigRational(5, 2));
    CHECK(BigRational::parse("-7").str() == "-7");
    CHECK_THROWS_AS(BigRational(1, 0), domain_error);
    CHECK_THROWS_AS(BigRational(1) / BigRational(0), domain_error);
    CHECK_THROWS_AS(BigRational::parse("1/x"), parse_error);
}

TEST_CASE("long double conversion keeps extended precision") {
    const BigRational third(1, 3);
    CHECK(std::fabs(third.to_long_double() - 1.0L / 3.0L) <= 2 * std::numeric_limits<long double>::epsilon());
    const BigRational big("2944491879", "8192");
    CHECK(big.to_long_double() == doctest::Approx(2944491879.0 / 8192.0).epsilon(1e-16));
    CHECK(BigRational(-5, 2).to_long_double() == -2.5L);
}

TEST_CASE("gauss_arith examples") {
    CHECK((-I) * (-I) == GaussRational(-1));
    CHECK((-I) + GaussRational(0) == -I);
    CHECK((-I * BigRational(1, 3)) * GaussRational(3) == -I);
    CHECK(GaussRational(BigRational(1), BigRational(2)) / GaussRational(BigRational(1), BigRational(2)) ==
          GaussRational(1));
    CHECK_THROWS_AS(I / GaussRational(0), domain_error);
    CHECK(GaussRational::i_pow(-1) == -I);
    CHECK(GaussRational::i_pow(6) == GaussRational(-1));
    CHECK((-I * BigRational(1, 3)).str() == "-1/3*i");
    CHECK(GaussRational(BigRational(1, 2), BigRational(-1)).str() == "1/2 - i");
}

TEST_CASE("gaussian rationals satisfy the ring axioms exactly") {
    testing::Generator gen(20261018);
    for (int trial = 0; trial < 200; ++trial) {
        const GaussRational x = gen.gauss(), y = gen.gauss(), z = gen.gauss();
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        const GaussRational w = gen.nonzero_gauss();
        CHECK(w * w.inverse() == GaussRational(1));
    }
}

TEST_CASE("poly_arith, derivative and evaluation") {
    const BackgroundPoly v1{GaussRational(0), I * BigRational(3, 2), GaussRational(0), I};
    const BackgroundPoly expected{I * BigRational(3, 2), GaussRational(0), I * BigRational(3)};
    CHECK(v1.derivative() == expected);
    CHECK(v1.derivative().degree() == v1.degree() - 1);
    CHECK((v1 * BackgroundPoly()).is_zero());
    const BackgroundPoly x2 = BackgroundPoly::monomial(GaussRational(1), 2);
    CHECK(x2.eval(GaussRational(2)) == GaussRational(4));
    CHECK(v1.eval(GaussRational(0)) == v1.coeff(0));
    CHECK((v1 - v1).degree() == -1);
    CHECK(to_string(v1) == "3/2*i*X + i*X^3");
    CHECK(BackgroundPoly{GaussRational(0), GaussRational(0), GaussRational(0)}.is_zero());
}

TEST_CASE("truncated series multiplication agrees with full product then truncation") {
    testing::Generator gen(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int order = 6;
        const BackgroundPoly p = gen.poly(order), q = gen.poly(order);
        TruncatedSeries<GaussRational> sp(order, p.coefficients()), sq(order, q.coefficients());
        const BackgroundPoly full = p * q;
        const auto prod = sp * sq;
        for (int n = 0; n <= order; ++n) {
            CHECK(prod[static_cast<std::size_t>(n)] == full.coeff(static_cast<std::size_t>(n)));
        }
    }
}

TEST_CASE("series inverse, square root and powers") {
    using S = TruncatedSeries<BigRational>;
    // 1 + t
    S one_plus_t(8, {BigRational(1), BigRational(1)});
    const S inv = one_plus_t.inverse();
    for (int n = 0; n <= 8; ++n) {
        CHECK(inv[static_cast<std::size_t>(n)] == BigRational(n % 2 ? -1 : 1));
    }
    const S root = one_plus_t.sqrt();
    CHECK(root * root == one_plus_t);
    CHECK(root[2] == BigRational(-1, 8));
    CHECK(one_plus_t.pow(3)[2] == BigRational(3));
    CHECK(one_plus_t.pow(-2) * one_plus_t.pow(2) == S::constant(8, BigRational(1)));
    CHECK_THROWS_AS(S(3, {BigRational(2)}).inverse(), domain_error);
}

TEST_CASE("half_binomial examples and integer agreement") {
    CHECK(half_binomial(BigRational(1, 2), 1) == BigRational(1, 2));
    CHECK(half_binomial(BigRational(7, 3), 0) == BigRational(1));
    // (-2)(-3)/2! = 3
    CHECK(half_binomial(BigRational(-2), 2) == BigRational(3));
    for (int n = 0; n <= 12; ++n) {
        for (int j = 0; j <= n; ++j) {
            CHECK(half_binomial(BigRational(n), static_cast<unsigned>(j)) == pascal(n, j));
        }
    }
    // C(n, j) = 0 for integer n < j
    CHECK(half_binomial(BigRational(3), 5).is_zero());
}

TEST_CASE("half_binomial matches the series of (1+t)^(1/2)") {
    using S = TruncatedSeries<BigRational>;
    const S root = S(10, {BigRational(1), BigRational(1)}).sqrt();
    for (unsigned j = 0; j <= 10; ++j) {
        CHECK(root[j] == half_binomial(BigRational(1, 2), j));
    }
}

TEST_CASE("radical field arithmetic") {
    const RadicalNumber theta = RadicalNumber::root_power(5, BigRational(22), 1);
    CHECK(theta.pow(5) == RadicalNumber(22));
    CHECK(theta * theta.inverse() == RadicalNumber(1));
    const RadicalNumber mixed = theta + RadicalNumber(3) + theta.pow(3) * RadicalNumber(BigRational(2, 7));
    CHECK(mixed * mixed.inverse() == RadicalNumber(1));
    CHECK(static_cast<double>(theta.to_long_double()) == doctest::Approx(std::pow(22.0, 0.2)).epsilon(1e-15));
    CHECK(RadicalNumber::root_power(5, BigRational(22), -1) == RadicalNumber(BigRational(1, 22)) * theta.pow(4));
    CHECK((theta * RadicalNumber(BigRational(5, 16))).str() == "5/16*22^(1/5)");
    CHECK_THROWS_AS(theta + RadicalNumber::root_power(5, BigRational(18), 1), domain_error);
}
