// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any line fails.

#include "slh/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace slh;

namespace {

// Tolerances, fixed here.
const Rational kCertTol(1, 1000000000);        // 1e-9
const Rational kTableTol(1, 10000);            // 1e-4
const double kOracleSlack = 1e-12;
const double kMembershipThreshold = 1e-3;
const double kCurveResidual = 1e-12;
const double kMaxCertifySeconds = 60;
const double kMaxRootSeconds = 1;
const double kMaxOracleSeconds = 120;
const std::uint64_t kOracleSamples = 1000000;
const std::uint64_t kMajorizationSamples = 10000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void report(int k, const std::string& title, const std::function<Outcome()>& run) {
    Outcome o;
    try {
        o = run();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", k, title.c_str(), o.detail.c_str());
    std::fflush(stdout);
}

Outcome cube_max(const FunctionalId& id, const char* name) {
    auto t0 = Clock::now();
    auto m = certify_max(bound_surrogate(id).surrogate, parameter_cuboid(), {kCertTol, 10000000});
    double secs = seconds_since(t0);
    const Rational target(1, 36);
    const std::vector<Rational> corner{0, 0, 1};
    bool ok = m.converged && target - kCertTol <= m.enclosure.lo && m.enclosure.hi <= target + kCertTol &&
              m.witness == corner && m.witness_value == target && secs < kMaxCertifySeconds;
    return {ok, std::string(name) + " in [" + to_decimal(m.enclosure.lo, 13) + ", " + to_decimal(m.enclosure.hi, 13) +
                    "], witness value " + to_string(m.witness_value) + " at (0,0,1), " + format_double(secs) + " s"};
}

}  // namespace

int main() {
    const FunctionalId h31{FunctionalTag::H3_1}, h23{FunctionalTag::H2_3}, zal{FunctionalTag::ZALCMAN_3};

    report(1, "max G over the cuboid = 1/36", [&] { return cube_max(h31, "G"); });
    report(2, "max F over the cuboid = 1/36", [&] { return cube_max(h23, "F"); });

    report(3, "exact polynomial identities", [&] {
        bool raw31 = raw_p_expansion(h31) == printed_raw_expansion(h31);
        bool raw23 = raw_p_expansion(h23) == printed_raw_expansion(h23);
        bool nu = reassembly_residual(h31, Transcription::corrected).is_zero();
        bool zeta = reassembly_residual(h23, Transcription::corrected).is_zero();
        bool nu_printed = reassembly_residual(h31, Transcription::printed).is_zero();
        bool zeta_printed = reassembly_residual(h23, Transcription::printed).is_zero();
        std::string d = std::string("raw H3(1) ") + (raw31 ? "equal" : "differs") + ", raw H2(3) " +
                        (raw23 ? "equal" : "differs") + ", nu/psi residual " + (nu ? "0" : "nonzero") +
                        ", zeta/xi residual " + (zeta ? "0" : "nonzero");
        if (!nu_printed || !zeta_printed)
            d += " (residuals use the corrected coefficient transcription; the printed one leaves a nonzero residual)";
        return Outcome{raw31 && raw23 && nu && zeta, d};
    });

    report(4, "edge/face table within 1e-4", [&] {
        int bad = 0, total = 0;
        std::string d;
        for (const auto& id : {h31, h23}) {
            auto edges = edge_table(id, {kCertTol, 1000000});
            for (const auto& e : edges) {
                for (const auto& pv : e.printed) {
                    ++total;
                    const auto& enc = e.max.enclosure;
                    bool ok = e.max.converged && abs(enc.lo - pv.value) <= kTableTol && abs(enc.hi - pv.value) <= kTableTol;
                    if (pv.exact) ok = ok && enc.contains(pv.value) && e.max.witness_value == pv.value;
                    if (e.printed_at) ok = ok && abs(e.argmax - e.printed_at->value) <= kTableTol;
                    if (!ok) {
                        ++bad;
                        d += " bad:" + id.name() + "/" + e.label;
                    }
                }
            }
            for (const auto& f : face_table(id, {kCertTol, 1000000}, &edges)) {
                ++total;
                if (!(f.max.converged && f.max.enclosure.hi - f.boundary_max <= kCertTol)) {
                    ++bad;
                    d += " bad:" + id.name() + "/face " + f.label;
                }
            }
        }
        std::map<std::string, Rational> corner{{"p", 0}, {"x", 0}, {"y", 1}};
        bool corners = bound_surrogate(h31).surrogate.eval(corner) == Rational(1, 36) &&
                       bound_surrogate(h23).surrogate.eval(corner) == Rational(1, 36);
        if (!corners) d += " corner value differs from 1/36";
        return Outcome{bad == 0 && corners, std::to_string(total - bad) + "/" + std::to_string(total) +
                                                " rows match; G(0,0,1) = F(0,0,1) = 1/36 " +
                                                (corners ? "exactly" : "fails") + d};
    });

    report(5, "root isolation of the two face eliminations", [&] {
        struct Spec {
            const char* name;
            const char* poly;
            Rational quoted;
        };
        const Spec specs[] = {
            {"G elimination", "75497472-107347968*p^2+51265024*p^4-8426096*p^6+95167*p^8", parse_rational("1.39732")},
            {"F elimination", "1048576-1196032*p^2+449216*p^4-57582*p^6+615*p^8", parse_rational("1.35957")},
        };
        bool ok = true;
        std::string d;
        for (const auto& s : specs) {
            auto t0 = Clock::now();
            auto iso = isolate_roots(parse_ratpoly(s.poly, {"p"}), {0, 2}, parse_rational("1e-12"));
            double secs = seconds_since(t0);
            bool one = iso.count() == 1;
            Rational root = one ? iso.roots[0].interval.midpoint() : Rational(0);
            bool near = one && abs(root - s.quoted) <= kTableTol;
            ok = ok && one && near && secs < kMaxRootSeconds;
            d += std::string(d.empty() ? "" : "; ") + s.name + ": " + std::to_string(iso.count()) + " root(s), at " +
                 to_decimal(root, 6) + " vs quoted " + to_decimal(s.quoted, 5) + (near ? "" : " (off)") + ", " +
                 format_double(secs * 1000) + " ms";
        }
        return Outcome{ok, d};
    });

    report(6, "Hermitian-form condition and the 1/8 bound", [&] {
        auto v = hermitian_condition({Rational(125, 768), Rational(43, 72), Rational(11, 24), Rational(3, 4)});
        Rational b = zalcman_bound_via_hermitian();
        auto f = extremal_sl(4, 8);
        bool ok = v.holds && v.margin >= 0 && b == Rational(1, 8) && f[5] == Rational(1, 8);
        return Outcome{ok, "margin " + to_string(v.margin) + ", bound " + to_string(b) + ", extremal a5 = " + to_string(f[5])};
    });

    report(7, "extremal coefficients and sharpness", [&] {
        auto f = extremal_sl(3, 8);
        std::vector<Rational> a(f.coefficients().begin(), f.coefficients().end());
        Rational v31 = evaluate_functional<Rational>(h31, std::span<const Rational>(a));
        Rational v23 = evaluate_functional<Rational>(h23, std::span<const Rational>(a));
        bool ok = a[2] == 0 && a[3] == 0 && a[4] == Rational(1, 6) && a[5] == 0 && v31 == Rational(-1, 36) &&
                  v23 == Rational(-1, 36);
        return Outcome{ok, "(a2,a3,a4,a5) = (" + to_string(a[2]) + "," + to_string(a[3]) + "," + to_string(a[4]) + "," +
                               to_string(a[5]) + "), H3(1) = " + to_string(v31) + ", H2(3) = " + to_string(v23)};
    });

    report(8, "oracle consistency", [&] {
        auto t0 = Clock::now();
        bool ok = true;
        std::string d;
        for (const auto& id : {h31, h23, zal}) {
            auto r = sample_sup(id, kOracleSamples, 0);
            Rational b = *known_bound(id);
            bool within = r.sample_max <= to_double(b) + kOracleSlack && r.exceedances == 0;
            bool exact = r.witness_max && *r.witness_max == b;
            ok = ok && within && exact;
            d += id.name() + " sample max " + format_double(r.sample_max) + ", witness " +
                 (r.witness_max ? to_string(*r.witness_max) : std::string("irrational")) + "; ";
        }
        double secs = seconds_since(t0);
        ok = ok && secs < kMaxOracleSeconds;
        return Outcome{ok, d + std::to_string(kOracleSamples) + " samples each, " + format_double(secs) + " s"};
    });

    report(9, "majorization at rational sample points", [&] {
        auto a = majorization_sample(h31, kMajorizationSamples, 0);
        auto b = majorization_sample(h23, kMajorizationSamples, 0);
        return Outcome{a.violations == 0 && b.violations == 0,
                       "|H3(1)| <= G: " + std::to_string(a.violations) + " violations, |H2(3)| <= F: " +
                           std::to_string(b.violations) + " violations in " + std::to_string(kMajorizationSamples) +
                           " points each"};
    });

    report(10, "class suite (grid-passed)", [&] {
        auto quarter = theta_membership(0.25);
        auto far = theta_membership(0.35);
        auto conv = convolution_nonvanishing(extremal_sl(3, 40), ParameterGrid::standard(), {0.95, 180, 8},
                                             {kMembershipThreshold, true});
        double worst = 0;
        for (int k = 1; k <= 1000; ++k)
            for (int s : {1, -1}) worst = std::max(worst, std::abs(lemniscate_param(2.0 * k / 1001, s).residual));
        bool ok = quarter.passes && !far.passes && conv.passes && conv.min_modulus > kMembershipThreshold &&
                  worst < kCurveResidual;
        return Outcome{ok, std::string("alpha=1/4 ") + (quarter.passes ? "passes" : "fails") + " (" +
                               format_double(quarter.worst_value) + "), alpha=0.35 " + (far.passes ? "passes" : "fails") +
                               " (" + format_double(far.worst_value) + "), convolution min " +
                               format_double(conv.min_modulus) + ", curve residual " + format_double(worst)};
    });

    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
