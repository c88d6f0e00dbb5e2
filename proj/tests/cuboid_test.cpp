#include "slh/cuboid.hpp"
#include "slh/displays.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

using namespace slh;

namespace {

const FunctionalId kH31{FunctionalTag::H3_1}, kH23{FunctionalTag::H2_3};
const CertifyOptions kOpts{parse_rational("1e-12"), 1000000};

const EdgeRow& row(const std::vector<EdgeRow>& rows, const std::string& label) {
    for (const auto& r : rows)
        if (r.label == label) return r;
    throw std::out_of_range(label);
}

bool encloses(const CertifiedMax& m, double v) {
    return to_double(m.enclosure.lo) <= v + 1e-15 && v - 1e-15 <= to_double(m.enclosure.hi);
}

}  // namespace

TEST(Cuboid, GEdgesClosedForms) {
    auto rows = edge_table(kH31, kOpts);
    ASSERT_EQ(rows.size(), 12U);
    // On p = 0, y = 0 the maximum is sqrt(2/3)/48 at x = sqrt(2/3).
    const auto& s = row(rows, "p=0,y=0");
    EXPECT_TRUE(encloses(s.max, std::sqrt(2.0 / 3.0) / 48));
    EXPECT_NEAR(to_double(s.argmax), std::sqrt(2.0 / 3.0), 1e-12);
    EXPECT_EQ(row(rows, "p=2,x=0").max.witness_value, Rational(29, 36864));
    EXPECT_EQ(row(rows, "p=0,x=1").max.witness_value, Rational(1, 64));
    EXPECT_EQ(row(rows, "x=0,y=1").max.witness_value, Rational(1, 36));
    EXPECT_EQ(row(rows, "x=0,y=1").argmax, Rational(0));
    for (const auto& r : rows) {
        EXPECT_TRUE(r.max.converged) << r.label;
        EXPECT_LE(r.max.enclosure.hi, Rational(1, 36)) << r.label;
    }
}

TEST(Cuboid, FEdgesClosedForms) {
    auto rows = edge_table(kH23, kOpts);
    const auto& s = row(rows, "p=0,y=0");
    EXPECT_TRUE(encloses(s.max, std::sqrt(3.0) / 144));
    EXPECT_NEAR(to_double(s.argmax), 1 / std::sqrt(3.0), 1e-12);
    EXPECT_EQ(row(rows, "p=2,y=1").max.witness_value, Rational(5, 18432));
    EXPECT_EQ(row(rows, "p=0,x=1").max.enclosure.hi, Rational(0));
    // Frozen: the x=1,y=0 edge maximum rounds to 0.00576045, not 0.0057645.
    const auto& e = row(rows, "x=1,y=0");
    EXPECT_TRUE(e.printed[0].agrees_with(e.max.enclosure));
    EXPECT_FALSE(e.printed[1].agrees_with(e.max.enclosure));
    for (const auto& r : rows) EXPECT_LE(r.max.enclosure.hi, Rational(1, 36)) << r.label;
}

TEST(Cuboid, FacesNeverExceedTheirEdges) {
    for (const auto& id : {kH31, kH23}) {
        auto edges = edge_table(id, kOpts);
        auto faces = face_table(id, kOpts, &edges);
        ASSERT_EQ(faces.size(), 6U);
        for (const auto& f : faces) {
            EXPECT_TRUE(f.max.converged);
            EXPECT_LE(f.max.enclosure.hi - f.boundary_max, kOpts.tol) << id.name() << " " << f.label;
        }
    }
}

TEST(Cuboid, FullMaximumAtCorner) {
    for (const auto& id : {kH31, kH23}) {
        auto m = certify_max(bound_surrogate(id).surrogate, parameter_cuboid(), {Rational(1, 1000000000), 10000000});
        EXPECT_TRUE(m.converged);
        EXPECT_EQ(m.witness_value, Rational(1, 36));
        EXPECT_EQ(m.witness, (std::vector<Rational>{0, 0, 1}));
        EXPECT_LE(m.enclosure.hi, Rational(1, 36) + Rational(1, 1000000000));
    }
}

TEST(PrintedValue, RoundingWindow) {
    auto d = PrintedValue::decimal("0.0057645");
    EXPECT_EQ(d.half_unit(), Rational(1, 20000000));
    EXPECT_TRUE(d.agrees_with({parse_rational("0.00576452"), parse_rational("0.00576453")}));
    EXPECT_FALSE(d.agrees_with(RatInterval::point(parse_rational("0.00576045"))));
    EXPECT_EQ(PrintedValue::rational("1/36").half_unit(), Rational(0));
}

TEST(Displays, MismatchSet) {
    std::set<std::string> g_bad, f_bad;
    for (const auto& c : display_checks(kH31))
        if (!c.matches) g_bad.insert(c.label);
    for (const auto& c : display_checks(kH23))
        if (!c.matches) f_bad.insert(c.label);
    EXPECT_EQ(g_bad, (std::set<std::string>{"G(p,x,0)", "d/dx G(p,x,0)", "d/dp G(p,x,0)", "G(0,x,1)", "G(0,x,0)",
                                            "interior y-stationary point of G"}));
    EXPECT_EQ(f_bad, (std::set<std::string>{"d/dp F(p,0,y) / p"}));
}

TEST(Feasibility, InteriorSystems) {
    auto g = critical_point_feasibility(kH31);
    EXPECT_TRUE(g.feasible);
    ASSERT_TRUE(g.witness.has_value());
    EXPECT_LT(g.a_at_witness, 0);
    EXPECT_GT(g.b_at_witness, 0);
    EXPECT_GT(g.y_stationary, 0);
    EXPECT_LT(g.y_stationary, 1);
    EXPECT_EQ(g.threshold_min, Rational(112, 55));
    ASSERT_TRUE(g.separating_counterexample.has_value());
    EXPECT_EQ(*g.separating_counterexample, std::make_pair(Rational(1), Rational(0)));

    auto f = critical_point_feasibility(kH23);
    EXPECT_TRUE(f.feasible);
    EXPECT_EQ(f.threshold_min, Rational(112, 37));
}
