#include "slh/oracle.hpp"
#include "slh/rational.hpp"

#include <gtest/gtest.h>

using namespace slh;

TEST(Rational, ParsesFractionsDecimalsAndExponents) {
    EXPECT_EQ(parse_rational("1/36"), Rational(1, 36));
    EXPECT_EQ(parse_rational("-6/8"), Rational(-3, 4));
    EXPECT_EQ(parse_rational("0.00596162"), Rational(298081, 50000000));
    EXPECT_EQ(parse_rational("1e-9"), Rational(1, 1000000000));
    EXPECT_EQ(parse_rational("2.5E2"), Rational(250));
    EXPECT_EQ(parse_rational("+3"), Rational(3));
}

TEST(Rational, RejectsMalformedText) {
    EXPECT_THROW(parse_rational(""), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1.2.3"), std::invalid_argument);
}

TEST(Rational, DecimalRenderingTruncates) {
    EXPECT_EQ(to_decimal(Rational(1, 36), 6), "0.027777");
    EXPECT_EQ(to_decimal(Rational(-1, 8), 4), "-0.1250");
    EXPECT_EQ(to_decimal(Rational(-1, 1000), 2), "-0.00");
    EXPECT_EQ(to_decimal(Rational(7), 0), "7");
}

TEST(Rational, FromDoubleIsExact) {
    EXPECT_EQ(from_double(0.375), Rational(3, 8));
    EXPECT_EQ(to_double(from_double(0.1)), 0.1);
    EXPECT_THROW(from_double(std::nan("")), std::invalid_argument);
}

TEST(ExactComplex, FieldOperations) {
    ExactComplex a(1, 2), b(3, -1);
    EXPECT_EQ(a * b, ExactComplex(5, 5));
    EXPECT_EQ((a * b) / b, a);
    EXPECT_EQ(norm(a), Rational(5));
    EXPECT_EQ(conj(a), ExactComplex(1, -2));
    EXPECT_EQ(a * conj(a), ExactComplex(norm(a)));
}

TEST(ExactSqrt, PerfectSquaresOnly) {
    EXPECT_EQ(exact_sqrt(Rational(1, 1296)), Rational(1, 36));
    EXPECT_EQ(exact_sqrt(Rational(0)), Rational(0));
    EXPECT_FALSE(exact_sqrt(Rational(2)).has_value());
    EXPECT_FALSE(exact_sqrt(Rational(-4)).has_value());
}
