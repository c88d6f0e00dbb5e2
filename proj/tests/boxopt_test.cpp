#include "slh/boxopt.hpp"
#include "slh/polyparse.hpp"

#include <gtest/gtest.h>

using namespace slh;

TEST(CertifyMax, ParabolaPeak) {
    auto f = parse_ratpoly("x*(1-x)", {"x"});
    auto m = certify_max(f, BoxRegion({"x"}, {{0, 1}}), {Rational(1, 1000000000), 100000});
    EXPECT_TRUE(m.converged);
    EXPECT_TRUE(m.enclosure.contains(Rational(1, 4)));
    EXPECT_EQ(m.witness_value, Rational(1, 4));
    EXPECT_EQ(m.witness, std::vector<Rational>{Rational(1, 2)});
}

TEST(CertifyMax, IrrationalMaximizer) {
    // max of x - x^3 on [0,1] is 2/(3 sqrt 3) at 1/sqrt 3.
    auto f = parse_ratpoly("x - x^3", {"x"});
    auto m = certify_max(f, BoxRegion({"x"}, {{0, 1}}), {parse_rational("1e-10"), 100000});
    double truth = 2.0 / (3.0 * std::sqrt(3.0));
    EXPECT_TRUE(m.converged);
    EXPECT_LE(to_double(m.enclosure.lo), truth + 1e-15);
    EXPECT_GE(to_double(m.enclosure.hi), truth - 1e-15);
    EXPECT_LE(to_double(m.enclosure.width()), 1e-10);
}

TEST(CertifyMax, MultivariateCorner) {
    auto f = parse_ratpoly("p^2 - x*y + y", {"p", "x", "y"});
    auto m = certify_max(f, BoxRegion({"p", "x", "y"}, {{-1, 2}, {0, 1}, {0, 1}}), {Rational(1, 1000), 10000});
    EXPECT_EQ(m.enclosure.lo, Rational(5));
    EXPECT_EQ(m.enclosure.hi, Rational(5));
    EXPECT_EQ(m.witness, (std::vector<Rational>{2, 0, 1}));
}

TEST(CertifyMax, BudgetAndArguments) {
    auto f = parse_ratpoly("x - x^3", {"x"});
    BoxRegion box({"x"}, {{0, 1}});
    auto m = certify_max(f, box, {parse_rational("1e-12"), 3});
    EXPECT_FALSE(m.converged);
    EXPECT_TRUE(m.enclosure.contains(from_double(2.0 / (3.0 * std::sqrt(3.0)))));
    EXPECT_THROW(certify_max(f, box, {Rational(0), 10}), std::invalid_argument);
    EXPECT_THROW(certify_max(f, box, {Rational(-1), 10}), std::invalid_argument);
}

TEST(FaceRestrict, RemovesVariableAndChecksRange) {
    auto f = parse_ratpoly("p^2 + x*y", {"p", "x", "y"});
    BoxRegion box({"p", "x", "y"}, {{0, 2}, {0, 1}, {0, 1}});
    auto g = face_restrict(f, box, "y", 1);
    EXPECT_FALSE(g.has_var("y"));
    EXPECT_EQ(g, parse_ratpoly("p^2 + x", {"p", "x"}));
    EXPECT_THROW(face_restrict(f, box, "y", 2), std::invalid_argument);
    EXPECT_THROW(face_restrict(f, box, "q", 0), std::invalid_argument);
    auto sub = drop_sides(box, {"y"});
    EXPECT_EQ(sub.vars, (std::vector<std::string>{"p", "x"}));
}
