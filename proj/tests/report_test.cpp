#include "slh/report.hpp"

#include <gtest/gtest.h>

using namespace slh;

TEST(Report, RationalJson) {
    auto j = rational_json(Rational(-1, 36));
    EXPECT_EQ(j["num"], "-1");
    EXPECT_EQ(j["den"], "36");
    EXPECT_EQ(j["decimal"], "-0.027777777777777");
}

TEST(Report, ValueJsonShapes) {
    EXPECT_TRUE(value_json(std::monostate{}).is_null());
    auto iv = value_json(RatInterval(Rational(1, 4), Rational(1, 2)));
    EXPECT_EQ(iv["width"]["num"], "1");
    EXPECT_EQ(iv["width"]["den"], "4");
    EXPECT_EQ(value_json(true), true);
    EXPECT_EQ(value_json(std::string("x")), "x");
}

TEST(Report, ExitCodeFollowsFailures) {
    VerificationReport r;
    r.command = "verify h31";
    r.add({"a", "s", Rational(1, 36), Rational(1, 36), ClaimStatus::certified, "", 0});
    r.add({"b", "s", {}, {}, ClaimStatus::discrepancy, "misprint", 0});
    EXPECT_EQ(r.exit_code(), 0);
    r.add({"c", "s", {}, 0.5, ClaimStatus::failed, "", 0});
    EXPECT_EQ(r.exit_code(), 1);
    auto counts = r.status_counts();
    EXPECT_EQ(counts["certified"], 1);
    EXPECT_EQ(counts["discrepancy"], 1);
    EXPECT_EQ(counts["failed"], 1);
}

TEST(Report, JsonLayoutAndTiming) {
    VerificationReport r;
    r.command = "roots";
    r.settings = {{"tol", "1e-9"}};
    r.add({"root", "one root", Rational(1), Rational(1), ClaimStatus::certified, "", 12.5});
    auto j = r.to_json();
    EXPECT_EQ(j["command"], "roots");
    EXPECT_EQ(j["settings"]["tol"], "1e-9");
    EXPECT_EQ(j["claims"][0]["status"], "certified");
    EXPECT_FALSE(j["claims"][0].contains("runtime_ms"));
    EXPECT_FALSE(j.contains("tables"));
    EXPECT_EQ(j["summary"]["certified"], 1);
    EXPECT_EQ(j["exit_code"], 0);
    r.timing = true;
    EXPECT_EQ(r.to_json()["claims"][0]["runtime_ms"], 12.5);
}

TEST(Report, TextTable) {
    VerificationReport r;
    r.command = "extremal";
    r.add({"a4", "a4 = 1/6", Rational(1, 6), Rational(1, 6), ClaimStatus::certified, "", 0});
    r.add({"grid", "grid", {}, true, ClaimStatus::grid_passed, "note here", 0});
    std::string t = r.to_text();
    EXPECT_NE(t.find("# extremal\n"), std::string::npos);
    EXPECT_NE(t.find("certified    a4     1/6"), std::string::npos);
    EXPECT_NE(t.find("note here"), std::string::npos);
    EXPECT_NE(t.find("# certified=1 grid-passed=1"), std::string::npos);
}

TEST(Report, AppendMergesTables) {
    VerificationReport a, b;
    b.tables["edges"] = {1, 2};
    b.add({"x", "", {}, {}, ClaimStatus::oracle_consistent, "", 0});
    a.append(b);
    EXPECT_EQ(a.claims.size(), 1U);
    EXPECT_EQ(a.tables["edges"].size(), 2U);
    EXPECT_EQ(format_double(0.1), "0.1");
}
