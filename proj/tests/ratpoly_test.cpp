#include "slh/bernstein.hpp"
#include "slh/polyparse.hpp"
#include "slh/ratpoly.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace slh;

namespace {

RatPoly P(const std::string& s, const std::vector<std::string>& v = {"p", "x", "y"}) { return parse_ratpoly(s, v); }

Rational dyadic(std::mt19937_64& g, int bits) {
    Rational r(static_cast<long>(g() % (1u << bits)), 1L << bits);
    r.canonicalize();
    return r;
}

}  // namespace

TEST(RatPoly, ArithmeticMatchesExpansion) {
    RatPoly x = RatPoly::variable("x"), y = RatPoly::variable("y");
    EXPECT_EQ((x + y).pow(2), x * x + RatPoly(2) * x * y + y * y);
    EXPECT_EQ((x + y) * (x - y), x * x - y * y);
    EXPECT_TRUE((x - x).is_zero());
    EXPECT_EQ((x * y).total_degree(), 2);
}

TEST(RatPoly, VariablesUnifyByName) {
    RatPoly a = P("x^2"), b = RatPoly::variable("x") * RatPoly::variable("x");
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.degree("x"), 2);
    EXPECT_EQ(a.degree("p"), 0);
}

TEST(RatPoly, EvaluationAndSubstitution) {
    RatPoly f = P("p^2*x - 3*y + 1/2");
    EXPECT_EQ(f.eval({Rational(2), Rational(1, 3), Rational(1)}), Rational(4, 3) - 3 + Rational(1, 2));
    RatPoly g = f.substitute("x", 3);
    EXPECT_EQ(g.var_index("x"), -1);
    EXPECT_EQ(g, P("3*p^2 - 3*y + 1/2").with_vars(g.vars()));
    EXPECT_THROW(f.eval({{"p", Rational(1)}}), std::invalid_argument);
}

TEST(RatPoly, DerivativeRules) {
    RatPoly f = P("p^3*x^2 + 5*x*y");
    EXPECT_EQ(f.derivative("x"), P("2*p^3*x + 5*y").with_vars(f.vars()));
    EXPECT_TRUE(P("y").derivative("x").is_zero());
    EXPECT_THROW(RatPoly::variable("x").derivative("q"), std::invalid_argument);
}

TEST(RatPoly, TextRoundTrip) {
    RatPoly f = P("29/36864*p^6 - 1/36*y^2 + 7*x");
    std::stringstream ss;
    write_ratpoly(ss, f);
    RatPoly g = read_ratpoly(ss);
    EXPECT_EQ(f, g);
    std::istringstream bad("polynomial 1 x\nend\n");
    EXPECT_THROW(read_ratpoly(bad), std::invalid_argument);
}

TEST(PolyParse, GrammarAndErrors) {
    EXPECT_EQ(P("(4-p^2)*(1-x^2)"), P("4 - 4*x^2 - p^2 + p^2*x^2"));
    EXPECT_EQ(P("-(x^2-2)/64"), P("1/32 - 1/64*x^2"));
    EXPECT_EQ(P("0.5*x"), P("1/2*x"));
    EXPECT_THROW(P("z + 1"), std::invalid_argument);
    EXPECT_THROW(P("x/y"), std::invalid_argument);
    EXPECT_THROW(P("(x + 1"), std::invalid_argument);
    EXPECT_THROW(P("2x"), std::invalid_argument);
}

TEST(Interval, EvalEnclosesPointValues) {
    RatPoly f = P("p^3 - 2*p*x + y^2 - x*y");
    BoxRegion box({"p", "x", "y"}, {{-1, 2}, {0, 1}, {Rational(-1, 2), 1}});
    RatInterval iv = interval_eval(f, box);
    std::mt19937_64 g(7);
    for (int i = 0; i < 200; ++i) {
        Rational p = 3 * dyadic(g, 10) - 1, x = dyadic(g, 10), y = Rational(3, 2) * dyadic(g, 10) - Rational(1, 2);
        Rational v = f.eval({p, x, y});
        EXPECT_TRUE(iv.contains(v));
    }
}

TEST(Bernstein, EnclosureContainsSamplesAndVerticesAreExact) {
    RatPoly f = P("p^3 - 2*p*x + y^2 - x*y + 1/7");
    BoxRegion box({"p", "x", "y"}, {{0, 2}, {0, 1}, {0, 1}});
    auto patch = BernsteinPatch::build(f, box);
    RatInterval e = patch.enclosure();
    std::mt19937_64 g(11);
    for (int i = 0; i < 300; ++i) {
        Rational p = 2 * dyadic(g, 12), x = dyadic(g, 12), y = dyadic(g, 12);
        EXPECT_TRUE(e.contains(f.eval({p, x, y})));
    }
    auto [v, at] = patch.best_vertex();
    EXPECT_EQ(v, f.eval(std::span<const Rational>(at)));
    EXPECT_EQ(v, Rational(8) + Rational(1) + Rational(1, 7));  // p=2, x=0, y=1
}

TEST(Bernstein, SplitTightensAndCovers) {
    RatPoly f = P("x^2 - x", {"x"});
    BoxRegion box({"x"}, {{0, 1}});
    auto patch = BernsteinPatch::build(f, box);
    auto [l, r] = patch.split(0);
    EXPECT_EQ(l.box().sides[0], RatInterval(0, Rational(1, 2)));
    EXPECT_EQ(r.box().sides[0], RatInterval(Rational(1, 2), 1));
    EXPECT_LE(patch.lower(), std::min(l.lower(), r.lower()));
    EXPECT_GE(patch.upper(), std::max(l.upper(), r.upper()));
    // At the split point the patches meet at the exact value -1/4.
    EXPECT_EQ(l.best_vertex().first, Rational(0));
    EXPECT_EQ(std::min(l.lower(), r.lower()), Rational(-1, 4));
}

TEST(Bernstein, RejectsUncoveredVariables) {
    BoxRegion box({"x"}, {{0, 1}});
    EXPECT_THROW(BernsteinPatch::build(P("x*y", {"x", "y"}), box), std::invalid_argument);
}
