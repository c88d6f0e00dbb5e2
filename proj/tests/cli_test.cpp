#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " \"" SLH_CLI_PATH "\" " + args + " 2>/dev/null";
    Run r{-1, ""};
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path scratch(const std::string& name) {
    auto d = std::filesystem::temp_directory_path() / ("slh_cli_test_" + name);
    std::filesystem::remove_all(d);
    std::filesystem::create_directories(d);
    return d;
}

}  // namespace

TEST(Cli, ExtremalQuartic) {
    auto r = run("extremal --n 4 --terms 8 --json");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\"num\": \"1\""), std::string::npos);
    EXPECT_NE(r.out.find("\"den\": \"8\""), std::string::npos);
    EXPECT_NE(r.out.find("\"exit_code\": 0"), std::string::npos);
}

TEST(Cli, Identities) {
    auto r = run("verify identities");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("nu-form identity"), std::string::npos);
    EXPECT_NE(r.out.find("discrepancy"), std::string::npos);
}

TEST(Cli, SharpBoundJson) {
    auto r = run("verify h31 --tol 1e-9 --json");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("H3(1) sharp bound"), std::string::npos);
    EXPECT_NE(r.out.find("\"status\": \"certified\""), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("verify h31 --no-such-flag").code, 2);
    EXPECT_EQ(run("verify h99").code, 2);
    EXPECT_EQ(run("extremal --n 0").code, 2);
    EXPECT_EQ(run("verify h31 --tol abc").code, 2);
}

TEST(Cli, RootsReportQuotedRootMismatch) {
    auto r = run("roots --json");
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("\"status\": \"failed\""), std::string::npos);
}

TEST(Cli, OracleIsReproducible) {
    auto a = run("oracle --functional h23 --samples 2000 --seed 5 --json");
    auto b = run("oracle --functional h23 --samples 2000 --seed 5 --jobs 3 --json");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(b.code, 0);
    auto strip = [](std::string s) {
        auto k = s.find("\"jobs\"");
        if (k != std::string::npos) s.erase(k, s.find('\n', k) - k);
        return s;
    };
    EXPECT_EQ(strip(a.out), strip(b.out));
}

TEST(Cli, ReportDirAndPolynomialDump) {
    auto dir = scratch("report");
    auto dump = dir / "polys.txt";
    auto r = run("verify zalcman --json --dump-poly " + dump.string(), "SLH_REPORT_DIR=" + dir.string());
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(std::filesystem::exists(dump));
    bool wrote_report = false;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".json") wrote_report = true;
    EXPECT_TRUE(wrote_report);
    std::ifstream in(dump);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_NE(ss.str().find("# "), std::string::npos);
    std::filesystem::remove_all(dir);
}
