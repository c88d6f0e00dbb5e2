#include "slh/series.hpp"

#include <gtest/gtest.h>

using namespace slh;

namespace {

RationalSeries one_plus_z(int order) { return RationalSeries::constant(order, 1) + RationalSeries::monomial(order, 1); }

}  // namespace

TEST(Series, SqrtSquaresBack) {
    auto s = series_sqrt(one_plus_z(12));
    EXPECT_EQ(s * s, one_plus_z(12));
    EXPECT_EQ(s[2], Rational(-1, 8));
    EXPECT_EQ(s[3], Rational(1, 16));
}

TEST(Series, ExpAndLogAreInverse) {
    RationalSeries u(10);
    u[1] = 1;
    u[3] = Rational(-2, 3);
    auto e = series_exp(u);
    EXPECT_EQ(series_log(e), u);
    // exp(z): 1/k!
    RationalSeries z = RationalSeries::monomial(8, 1);
    EXPECT_EQ(series_exp(z)[5], Rational(1, 120));
}

TEST(Series, ReciprocalAndPreconditions) {
    auto r = series_reciprocal(one_plus_z(6));
    for (int k = 0; k <= 6; ++k) EXPECT_EQ(r[k], Rational(k % 2 ? -1 : 1));
    EXPECT_THROW(series_reciprocal(RationalSeries::monomial(4, 1)), std::domain_error);
    EXPECT_THROW(series_sqrt(RationalSeries::monomial(4, 1)), std::domain_error);
    EXPECT_THROW(series_exp(one_plus_z(4)), std::domain_error);
    EXPECT_THROW(RationalSeries(-1), std::invalid_argument);
    EXPECT_THROW(one_plus_z(3) + one_plus_z(4), std::invalid_argument);
}

TEST(Series, HadamardAndShifts) {
    RationalSeries a(4, {0, 1, 2, 3, 4}), b(4, {0, 1, 1, 1, 1});
    EXPECT_EQ(hadamard(a, a)[3], Rational(9));
    EXPECT_EQ(a.shifted_down(1).order(), 3);
    EXPECT_EQ(a.shifted_down(1)[0], Rational(1));
    EXPECT_EQ(b.shifted_up(2)[4], Rational(1));
    EXPECT_EQ(b.substitute_power(2)[4], Rational(1));
    EXPECT_EQ(b.substitute_power(2)[3], Rational(0));
    EXPECT_THROW(a.shifted_down(2), std::domain_error);
}

TEST(Extremal, CubicCoefficients) {
    auto f = extremal_sl(3, 8);
    std::vector<Rational> expected{0, 1, 0, 0, Rational(1, 6), 0, 0, Rational(-1, 144), 0};
    for (int k = 0; k <= 8; ++k) EXPECT_EQ(f[k], expected[static_cast<std::size_t>(k)]) << "a" << k;
}

TEST(Extremal, QuarticCoefficients) {
    auto f = extremal_sl(4, 8);
    EXPECT_EQ(f[5], Rational(1, 8));
    for (int k : {2, 3, 4, 6, 7, 8}) EXPECT_EQ(f[k], Rational(0)) << "a" << k;
}

TEST(Extremal, FirstOrderMatchesClosedForm) {
    // z f'/f = sqrt(1+z): f = 4z exp(2(sqrt(1+z) - 1)) / (1 + sqrt(1+z))^2.
    // Independent check: a2 = 1/2, a3 = 1/16 from the recursion (n-1) a_n = sum c_k a_{n-k}.
    auto f = extremal_sl(1, 6);
    auto c = series_sqrt(one_plus_z(5));
    for (int n = 2; n <= 6; ++n) {
        Rational acc = 0;
        for (int k = 1; k < n; ++k) acc += c[k] * f[n - k];
        EXPECT_EQ(Rational(n - 1) * f[n], acc) << "a" << n;
    }
    EXPECT_EQ(f[2], Rational(1, 2));
    EXPECT_EQ(f[3], Rational(1, 16));
}

TEST(Extremal, DefiningRelationHolds) {
    for (int n : {1, 2, 3, 4, 5}) {
        auto w = logarithmic_derivative_ratio(extremal_sl(n, 16));
        auto target = RationalSeries::constant(w.order(), 1) + RationalSeries::monomial(w.order(), n);
        EXPECT_EQ(w * w, target) << "n = " << n;
    }
    EXPECT_THROW(extremal_sl(0, 4), std::invalid_argument);
    EXPECT_THROW(extremal_sl(4, 4), std::invalid_argument);
}

TEST(Series, LogarithmicDerivativeRequiresNormalization) {
    RationalSeries f(4, {0, 2, 0, 0, 0});
    EXPECT_THROW(logarithmic_derivative_ratio(f), std::domain_error);
}
