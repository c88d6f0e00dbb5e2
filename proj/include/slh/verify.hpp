#pragma once

#include "slh/boxopt.hpp"
#include "slh/classtools.hpp"
#include "slh/cuboid.hpp"
#include "slh/displays.hpp"
#include "slh/functionals.hpp"
#include "slh/oracle.hpp"
#include "slh/polyparse.hpp"
#include "slh/report.hpp"
#include "slh/series.hpp"
#include "slh/sturm.hpp"

#include <chrono>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace slh {

struct VerifyOptions {
    Rational tol = Rational(1, 1000000000);
    std::uint64_t max_boxes = 1000000;
    bool edges_only = false;
    bool faces_only = false;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    std::uint64_t samples = 1000000;
    bool boundary = false;
    std::uint64_t majorization_samples = 10000;
    /// Functionals sampled by the oracle; empty means h31, h23 and zalcman.
    std::vector<FunctionalId> oracle_functionals;
    int extremal_n = 3;
    int extremal_terms = 8;
    std::optional<double> alpha;
    int membership_extremal = 3;
    int t_steps = 20;
    double radius = 0.95;

    CertifyOptions certify() const { return {tol, max_boxes}; }

    std::vector<std::pair<std::string, std::string>> settings() const {
        std::string funcs;
        for (const auto& f : oracle_functionals) funcs += (funcs.empty() ? "" : ",") + f.name();
        return {{"tol", to_decimal(tol, 15)},
                {"max_boxes", std::to_string(max_boxes)},
                {"seed", std::to_string(seed)},
                {"jobs", std::to_string(jobs)},
                {"samples", std::to_string(samples)},
                {"boundary", boundary ? "true" : "false"},
                {"majorization_samples", std::to_string(majorization_samples)},
                {"oracle_functionals", funcs.empty() ? "h31,h23,zalcman" : funcs},
                {"t_steps", std::to_string(t_steps)},
                {"radius", format_double(radius)}};
    }
};

namespace detail {

template <class F>
Claim timed(F&& build) {
    auto t0 = std::chrono::steady_clock::now();
    Claim c = build();
    c.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return c;
}

inline ClaimStatus certified_if(bool ok) { return ok ? ClaimStatus::certified : ClaimStatus::failed; }

inline std::string functional_label(const FunctionalId& id) {
    switch (id.tag) {
        case FunctionalTag::H3_1: return "H3(1)";
        case FunctionalTag::H2_3: return "H2(3)";
        case FunctionalTag::ZALCMAN_3: return "|a3^2-a5|";
        default: return id.name();
    }
}

inline std::string surrogate_label(const FunctionalId& id) { return id.tag == FunctionalTag::H3_1 ? "G" : "F"; }

inline std::string point_text(const std::vector<Rational>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
}

inline std::string dec(const Rational& q, int digits = 8) { return to_decimal(q, digits); }

inline Rational decimal_tolerance() { return Rational(1, 10000); }

/// Roots in (lo, hi) of a univariate polynomial, refined to width 1e-15.
inline RootIsolation roots_in(const RatPoly& f, const Rational& lo, const Rational& hi) {
    return isolate_roots(f, RatInterval(lo, hi), Rational(1, 1000000000000000));
}

struct RootSpec {
    std::string id;
    std::string statement;
    std::string poly;
    std::string var;
    Rational lo, hi;
    PrintedValue printed;
};

inline std::vector<RootSpec> root_specs() {
    auto D = PrintedValue::decimal;
    return {
        {"G face x=0 elimination root", "one root in (0,2), near 1.39732",
         "75497472-107347968*p^2+51265024*p^4-8426096*p^6+95167*p^8", "p", 0, 2, D("1.39732")},
        {"F face x=0 elimination root", "one root in (0,2), near 1.35957",
         "1048576-1196032*p^2+449216*p^4-57582*p^6+615*p^8", "p", 0, 2, D("1.35957")},
        {"G edge x=1 critical point", "one root of dG(p,1,y)/dp / p in (0,2), near 1.2008",
         "45568-31680*p^2+54*p^4", "p", 0, 2, D("1.2008")},
        {"F edge x=1 critical point", "one root of dF(p,1,y)/dp / p in (0,2), near 1.39838",
         "7168-4000*p^2+171*p^4", "p", 0, 2, D("1.39838")},
        {"G face x=0 y-stationary threshold", "y-stationary point in (0,1) needs p > p0, p0 near 1.47292",
         "59*p^2-128", "p", 0, 2, D("1.47292")},
        {"F face x=0 y-stationary threshold", "y-stationary point in (0,1) needs p > p0, p0 near 1.7669",
         "41*p^2-128", "p", 0, 2, D("1.7669")},
    };
}

}  // namespace detail

/// Raw expansions and complex-form reassemblies.
inline VerificationReport verify_identities(const VerifyOptions& = {}) {
    VerificationReport rep;
    rep.command = "verify identities";
    const FunctionalId h31{FunctionalTag::H3_1}, h23{FunctionalTag::H2_3}, zal{FunctionalTag::ZALCMAN_3};
    for (const auto& id : {h31, h23, zal}) {
        rep.add(detail::timed([&] {
            bool eq = raw_p_expansion(id) == printed_raw_expansion(id);
            return Claim{detail::functional_label(id) + " raw expansion",
                         "expansion in p, p2, p3, p4 equals the transcribed expansion term for term",
                         std::string("identical"), std::string(eq ? "identical" : "differs"),
                         detail::certified_if(eq), ""};
        }));
    }
    struct Form {
        FunctionalId id;
        std::string name;
    };
    for (const auto& f : {Form{h31, "nu-form"}, Form{h23, "zeta-form"}}) {
        rep.add(detail::timed([&] {
            bool zero = reassembly_residual(f.id, Transcription::corrected).is_zero();
            return Claim{f.name + " identity", "cartesian reassembly minus raw expansion is the zero polynomial",
                         std::string("zero polynomial"), std::string(zero ? "zero polynomial" : "nonzero"),
                         detail::certified_if(zero), ""};
        }));
        rep.add(detail::timed([&] {
            bool zero = reassembly_residual(f.id, Transcription::printed).is_zero();
            std::string note = f.id.tag == FunctionalTag::H3_1
                                   ? "third coefficient: sign of the 4096 term and the 512|gamma|^2 term"
                                   : "first coefficient uses gamma^2 for gamma^3; third uses gamma^2, gamma for "
                                     "|gamma|^2, conj(gamma)";
            return Claim{f.name + " as printed", "printed complex form reassembles the raw expansion",
                         std::string("zero polynomial"), std::string(zero ? "zero polynomial" : "nonzero"),
                         zero ? ClaimStatus::certified : ClaimStatus::discrepancy, zero ? "" : note};
        }));
    }
    return rep;
}

/// Edge rows for G or F against the quoted maxima.
inline VerificationReport verify_edges(const FunctionalId& id, const VerifyOptions& opts = {},
                                       std::vector<EdgeRow>* keep = nullptr) {
    VerificationReport rep;
    rep.command = "edges " + id.name();
    const std::string S = detail::surrogate_label(id);
    auto t0 = std::chrono::steady_clock::now();
    auto rows = edge_table(id, opts.certify());
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() /
                static_cast<double>(rows.size());
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    const Rational tol = detail::decimal_tolerance();
    for (const auto& r : rows) {
        const auto& enc = r.max.enclosure;
        bool at_ok = !r.printed_at || abs(r.argmax - r.printed_at->value) <= tol;
        std::vector<bool> value_ok, digits_ok;
        for (const auto& pv : r.printed) {
            bool ok = pv.exact ? (enc.contains(pv.value) && r.max.witness_value == pv.value)
                               : (abs(enc.lo - pv.value) <= tol && abs(enc.hi - pv.value) <= tol);
            value_ok.push_back(ok && r.max.converged);
            digits_ok.push_back(pv.agrees_with(enc));
        }
        for (std::size_t k = 0; k < r.printed.size(); ++k) {
            const auto& pv = r.printed[k];
            Claim c;
            c.id = S + " edge " + r.label + (r.printed.size() > 1 ? " [" + pv.text + "]" : "");
            c.statement = "max over the edge is " + pv.text + (r.printed_at ? " at " + r.free_var + " = " + r.printed_at->text : "");
            c.expected = pv.value;
            c.computed = enc;
            c.runtime_ms = ms;
            c.note = "argmax " + r.free_var + " = " + detail::dec(r.argmax, 10);
            if (!value_ok[k] || !at_ok) {
                c.status = ClaimStatus::failed;
            } else if (!digits_ok[k]) {
                c.status = ClaimStatus::discrepancy;
                c.note += "; within 1e-4 but not at the quoted precision";
            } else {
                c.status = ClaimStatus::certified;
            }
            rep.add(std::move(c));
        }
        nlohmann::ordered_json row;
        row["edge"] = r.label;
        row["free"] = r.free_var;
        row["enclosure"] = value_json(enc);
        row["argmax"] = detail::dec(r.argmax, 15);
        row["subdivisions"] = r.max.subdivisions;
        nlohmann::ordered_json printed = nlohmann::ordered_json::array();
        for (const auto& pv : r.printed) printed.push_back(pv.text);
        row["quoted"] = printed;
        table.push_back(std::move(row));
    }
    rep.tables[S + " edges"] = table;
    if (keep) *keep = std::move(rows);
    return rep;
}

/// Face maxima for G or F, each compared with the best of its four edges.
inline VerificationReport verify_faces(const FunctionalId& id, const VerifyOptions& opts = {},
                                       const std::vector<EdgeRow>* edges = nullptr) {
    VerificationReport rep;
    rep.command = "faces " + id.name();
    const std::string S = detail::surrogate_label(id);
    std::vector<EdgeRow> own;
    if (!edges) {
        own = edge_table(id, opts.certify());
        edges = &own;
    }
    auto t0 = std::chrono::steady_clock::now();
    auto rows = face_table(id, opts.certify(), edges);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() /
                static_cast<double>(rows.size());
    for (const auto& r : rows) {
        Claim c;
        c.id = S + " face " + r.label;
        c.statement = "face maximum is attained on the face boundary";
        c.expected = r.boundary_max;
        c.computed = r.max.enclosure;
        c.runtime_ms = ms;
        c.status = detail::certified_if(r.max.converged && r.max.enclosure.hi - r.boundary_max <= opts.tol);
        c.note = "witness " + detail::point_text(r.max.witness);
        rep.add(std::move(c));
    }
    return rep;
}

/// The cuboid maximum of G (H3(1)) or F (H2(3)) plus the supporting checks.
inline VerificationReport verify_bound(const FunctionalId& id, const VerifyOptions& opts = {}) {
    if (id.tag != FunctionalTag::H3_1 && id.tag != FunctionalTag::H2_3)
        throw std::invalid_argument("verify_bound: expected h31 or h23");
    VerificationReport rep;
    rep.command = "verify " + id.name();
    const std::string F = detail::functional_label(id), S = detail::surrogate_label(id);
    const Rational bound(1, 36);

    if (opts.edges_only || opts.faces_only) {
        std::vector<EdgeRow> edges;
        auto e = verify_edges(id, opts, &edges);
        if (opts.edges_only) rep.append(e);
        if (opts.faces_only) rep.append(verify_faces(id, opts, &edges));
        return rep;
    }

    rep.add(detail::timed([&] {
        auto m = certify_max(bound_surrogate(id).surrogate, parameter_cuboid(), opts.certify());
        const std::vector<Rational> corner{0, 0, 1};
        bool ok = m.converged && m.enclosure.contains(bound) && m.enclosure.width() <= opts.tol &&
                  m.witness_value == bound && m.witness == corner;
        return Claim{F + " sharp bound", "|" + F + "| <= max of " + S + " over [0,2]x[0,1]x[0,1] = 1/36", bound,
                     m.enclosure, detail::certified_if(ok),
                     "witness " + detail::point_text(m.witness) + " value " + to_string(m.witness_value) + ", " +
                         std::to_string(m.subdivisions) + " subdivisions"};
    }));

    rep.add(detail::timed([&] {
        auto f = extremal_sl(3, 8);
        std::vector<Rational> a(f.coefficients().begin(), f.coefficients().end());
        Rational v = evaluate_functional<Rational>(id, std::span<const Rational>(a));
        bool ok = a[2] == 0 && a[3] == 0 && a[4] == Rational(1, 6) && a[5] == 0 && v == -bound;
        return Claim{F + " attained", "z f'/f = sqrt(1+z^3) gives " + F + " = -1/36", Rational(-bound), v,
                     detail::certified_if(ok), "a2..a5 = 0, 0, " + to_string(a[4]) + ", " + to_string(a[5])};
    }));

    rep.add(detail::timed([&] {
        auto m = majorization_sample(id, opts.majorization_samples, opts.seed);
        bool ok = m.violations == 0;
        return Claim{F + " majorization sample",
                     "|" + F + "| <= " + S + "(p,|gamma|,|eta|) at " + std::to_string(m.samples) + " rational points",
                     std::string("0 violations"), std::string(std::to_string(m.violations) + " violations"),
                     ok ? ClaimStatus::oracle_consistent : ClaimStatus::failed, "exact comparison"};
    }));

    std::vector<EdgeRow> edges;
    rep.append(verify_edges(id, opts, &edges));
    rep.append(verify_faces(id, opts, &edges));

    for (const auto& d : display_checks(id)) {
        Claim c;
        c.id = S + " display " + d.label;
        c.statement = d.relation == DisplayRelation::vanishes      ? "quoted stationary point satisfies the equation"
                      : d.relation == DisplayRelation::proportional ? "quoted polynomial is proportional to the recomputed one"
                                                                    : "quoted polynomial equals the recomputed one";
        c.expected = std::string(d.relation == DisplayRelation::vanishes ? "zero polynomial" : "match");
        c.computed = std::string(d.matches ? "match" : "mismatch");
        c.status = d.matches ? ClaimStatus::certified : ClaimStatus::discrepancy;
        if (!d.matches && d.relation != DisplayRelation::vanishes) c.note = "recomputed: " + to_pretty(d.derived);
        rep.add(std::move(c));
    }

    rep.add(detail::timed([&] {
        auto fr = critical_point_feasibility(id);
        Claim c;
        c.id = S + " interior critical point";
        c.statement = "the two sign conditions for an interior y-stationary point are incompatible";
        c.expected = std::string("infeasible");
        c.computed = std::string(fr.feasible ? "feasible" : "infeasible");
        if (fr.feasible) {
            c.status = ClaimStatus::discrepancy;
            c.note = "witness (p,x) = (" + to_string(fr.witness->first) + "," + to_string(fr.witness->second) +
                     "), stationary y = " + detail::dec(fr.y_stationary, 6) + "; the cuboid maximum is certified directly";
        } else {
            c.status = ClaimStatus::certified;
        }
        return c;
    }));
    rep.add(detail::timed([&] {
        auto fr = critical_point_feasibility(id);
        Claim c;
        c.id = S + " separating inequality";
        c.statement = "the cubic term dominates for p >= 1";
        c.expected = std::string("holds");
        c.computed = std::string(fr.separating_counterexample ? "counterexample" : "holds");
        c.status = fr.separating_counterexample ? ClaimStatus::discrepancy : ClaimStatus::certified;
        if (fr.separating_counterexample)
            c.note = "(p,x) = (" + to_string(fr.separating_counterexample->first) + "," +
                     to_string(fr.separating_counterexample->second) + ")";
        return c;
    }));
    return rep;
}

/// Hermitian-form bound |a3^2 - a5| <= 1/8 and its extremal.
inline VerificationReport verify_zalcman(const VerifyOptions& = {}) {
    VerificationReport rep;
    rep.command = "verify zalcman";
    const FunctionalId zal{FunctionalTag::ZALCMAN_3};
    rep.add(detail::timed([&] {
        auto v = hermitian_condition(zalcman_hermitian_params());
        return Claim{"Hermitian-form condition", "condition holds at (a,b,c,d) = (125/768, 43/72, 11/24, 3/4)",
                     std::string("margin >= 0"), v.margin, detail::certified_if(v.holds),
                     "lhs " + to_string(v.lhs) + ", rhs " + to_string(v.rhs)};
    }));
    rep.add(detail::timed([&] {
        Claim c{"|a3^2-a5| sharp bound", "|a3^2 - a5| <= 1/8", Rational(1, 8), {}, ClaimStatus::failed, ""};
        try {
            Rational b = zalcman_bound_via_hermitian();
            c.computed = b;
            c.status = detail::certified_if(b == Rational(1, 8));
        } catch (const std::logic_error& e) {
            c.computed = std::string("no bound");
            c.note = e.what();
        }
        return c;
    }));
    rep.add(detail::timed([&] {
        auto f = extremal_sl(4, 8);
        std::vector<Rational> a(f.coefficients().begin(), f.coefficients().end());
        Rational v = evaluate_functional<Rational>(zal, std::span<const Rational>(a));
        bool ok = a[5] == Rational(1, 8) && abs(v) == Rational(1, 8);
        return Claim{"|a3^2-a5| attained", "z f'/f = sqrt(1+z^4) gives a5 = 1/8 and a3 = 0", Rational(1, 8), abs(v),
                     detail::certified_if(ok), "a5 = " + to_string(a[5])};
    }));
    return rep;
}

/// Root isolation for the quoted univariate polynomials.
inline VerificationReport verify_roots(const VerifyOptions& = {}) {
    VerificationReport rep;
    rep.command = "roots";
    const Rational tol = detail::decimal_tolerance();
    for (const auto& spec : detail::root_specs()) {
        rep.add(detail::timed([&] {
            RatPoly f = parse_ratpoly(spec.poly, {spec.var});
            auto t0 = std::chrono::steady_clock::now();
            auto iso = detail::roots_in(f, spec.lo, spec.hi);
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            Claim c;
            c.id = spec.id;
            c.statement = spec.statement;
            c.expected = spec.printed.value;
            if (iso.count() == 1) {
                c.computed = iso.roots[0].interval;
                Rational mid = iso.roots[0].interval.midpoint();
                bool near = abs(mid - spec.printed.value) <= tol;
                c.status = detail::certified_if(near && secs < 1.0);
                c.note = "root " + detail::dec(mid, 10);
                if (!near) c.note += "; quoted value is " + detail::dec(abs(mid - spec.printed.value), 6) + " away";
            } else {
                c.computed = std::string(std::to_string(iso.count()) + " roots");
                c.status = ClaimStatus::failed;
            }
            return c;
        }));
    }
    return rep;
}

/// Coefficients of the extremal function with z f'/f = sqrt(1 + z^n).
inline VerificationReport verify_extremal(int n, int terms) {
    if (n < 1) throw std::invalid_argument("extremal: n must be >= 1");
    if (terms < n + 1) throw std::invalid_argument("extremal: terms must be at least n + 1");
    VerificationReport rep;
    rep.command = "extremal --n " + std::to_string(n) + " --terms " + std::to_string(terms);
    auto f = extremal_sl(n, terms);
    const std::string tag = "extremal n=" + std::to_string(n);
    nlohmann::ordered_json table = nlohmann::ordered_json::array();
    for (int k = 0; k <= terms; ++k) {
        rep.add({tag + " a" + std::to_string(k), "coefficient of z^" + std::to_string(k), {}, f[k],
                 ClaimStatus::certified, ""});
        table.push_back(rational_json(f[k]));
    }
    rep.tables[tag] = table;
    rep.add(detail::timed([&] {
        auto w = logarithmic_derivative_ratio(f);
        auto target = RationalSeries::constant(w.order(), 1) + RationalSeries::monomial(w.order(), n);
        bool ok = w * w == target;
        return Claim{tag + " defining relation", "(z f'/f)^2 = 1 + z^" + std::to_string(n) + " to the truncation order",
                     std::string("exact"), std::string(ok ? "exact" : "differs"), detail::certified_if(ok), ""};
    }));
    if (n == 3 && terms >= 5) {
        bool ok = f[2] == 0 && f[3] == 0 && f[4] == Rational(1, 6) && f[5] == 0;
        rep.add({tag + " a2..a5", "(a2, a3, a4, a5) = (0, 0, 1/6, 0)", std::string("0, 0, 1/6, 0"),
                 std::string(to_string(f[2]) + ", " + to_string(f[3]) + ", " + to_string(f[4]) + ", " + to_string(f[5])),
                 detail::certified_if(ok), ""});
    }
    if (n == 4 && terms >= 5)
        rep.add({tag + " a5", "a5 = 1/8", Rational(1, 8), f[5], detail::certified_if(f[5] == Rational(1, 8)), ""});
    return rep;
}

/// Grid checks of membership for z/(1 - alpha z) and for an extremal function.
inline VerificationReport verify_membership(const VerifyOptions& opts = {}) {
    VerificationReport rep;
    rep.command = "membership";
    auto grid_status = [](bool ok) { return ok ? ClaimStatus::grid_passed : ClaimStatus::failed; };
    rep.add(detail::timed([&] {
        bool all = true;
        double worst = 0;
        for (int k = 0; k <= 5; ++k) {
            auto v = theta_membership(0.05 * k);
            all = all && v.passes;
            worst = std::max(worst, v.worst_value);
        }
        return Claim{"theta sufficiency", "z/(1 - alpha z) is in SL* for 0 <= alpha <= 1/4 (alpha step 0.05)",
                     std::string("passes"), worst, grid_status(all), "max |w^2-1| over the alphas; |z| <= 0.999"};
    }));
    rep.add(detail::timed([&] {
        auto v = theta_membership(0.25);
        return Claim{"theta alpha=1/4", "z/(1 - z/4) is in SL*", std::string("passes"), v.worst_value,
                     grid_status(v.passes), ""};
    }));
    rep.add(detail::timed([&] {
        auto v = theta_membership(0.35);
        return Claim{"theta alpha=0.35", "z/(1 - 0.35 z) leaves SL* near z = 1", std::string("fails"), v.worst_value,
                     grid_status(!v.passes), ""};
    }));
    rep.add(detail::timed([&] {
        double thr = theta_empirical_threshold();
        bool ok = thr > 0.25 && thr < 0.35;
        return Claim{"theta empirical threshold", "grid threshold lies above 1/4 (not claimed sharp)",
                     1 - std::sqrt(2.0) / 2, thr, grid_status(ok), "1 - sqrt(2)/2 is the limit as |z| -> 1"};
    }));
    if (opts.alpha) {
        double a = *opts.alpha;
        rep.add(detail::timed([&] {
            auto v = theta_membership(a);
            Claim c{"theta alpha=" + format_double(a), "grid verdict for z/(1 - alpha z)", {}, v.worst_value,
                    ClaimStatus::grid_passed, v.passes ? "inside" : "outside"};
            if (std::abs(a) <= 0.25) {
                c.expected = std::string("passes");
                c.status = grid_status(v.passes);
            }
            return c;
        }));
    }
    rep.add(detail::timed([&] {
        int n = opts.membership_extremal;
        auto f = extremal_sl(n, 600);
        auto v = sl_membership_grid(f, {0.99, 720, 8});
        double expect = std::pow(0.99, n);
        return Claim{"extremal n=" + std::to_string(n) + " membership",
                     "z f'/f = sqrt(1+z^" + std::to_string(n) + ") stays in the lemniscate loop (|z| <= 0.99)",
                     expect, v.worst_value, grid_status(v.passes),
                     "order 600, tail bound " + format_double(v.tail_bound)};
    }));
    return rep;
}

/// Lemniscate parametrization, kernel identities and convolution nonvanishing.
inline VerificationReport verify_convolution(const VerifyOptions& opts = {}) {
    VerificationReport rep;
    rep.command = "convolution";
    auto grid_status = [](bool ok) { return ok ? ClaimStatus::grid_passed : ClaimStatus::failed; };
    rep.add(detail::timed([&] {
        double worst = 0;
        for (int k = 1; k <= 1000; ++k)
            for (int s : {1, -1}) worst = std::max(worst, std::abs(lemniscate_param(2.0 * k / 1001, s).residual));
        return Claim{"lemniscate parametrization", "S(t) lies on (u^2+v^2)^2 = 2(u^2-v^2), 1000 t values, both signs",
                     1e-12, worst, grid_status(worst < 1e-12), "max residual"};
    }));
    const auto tg = ParameterGrid::standard(opts.t_steps);
    rep.add(detail::timed([&] {
        double worst = 0;
        for (double t : tg.t)
            for (int s : {1, -1}) {
                auto S = lemniscate_param(t, s).value;
                auto a = convolution_kernel(S, 40), b = convolution_kernel_by_division(S, 40);
                for (int n = 0; n <= 40; ++n) worst = std::max(worst, std::abs(a[n] - b[n]));
            }
        return Claim{"kernel closed form", "b_n = (n - S)/(1 - S) agrees with series division to order 40", 1e-12, worst,
                     grid_status(worst <= 1e-12), "max coefficient difference"};
    }));
    auto f = extremal_sl(3, 40);
    rep.add(detail::timed([&] {
        auto fc = ComplexSeries(40);
        for (int k = 0; k <= 40; ++k) fc[k] = to_double(f[k]);
        double worst = 0;
        for (double t : tg.t)
            for (int s : {1, -1}) {
                auto S = lemniscate_param(t, s).value;
                auto lhs = hadamard(fc, convolution_kernel(S, 40)).shifted_down(1);
                ComplexSeries zfp(40);
                for (int k = 0; k <= 40; ++k) zfp[k] = static_cast<double>(k) * fc[k];
                auto rhs = (1.0 / (1.0 - S)) * (zfp - S * fc);
                auto rhs_down = rhs.shifted_down(1);
                for (int n = 0; n <= 38; ++n) worst = std::max(worst, std::abs(lhs[n] - rhs_down[n]));
            }
        return Claim{"convolution identity", "(f*H)(z)/z = (z f' - S f)/(z (1 - S)) through order 38", 1e-12, worst,
                     grid_status(worst <= 1e-12), "f with z f'/f = sqrt(1+z^3), order 40"};
    }));
    rep.add(detail::timed([&] {
        auto v = convolution_nonvanishing(f, tg, {opts.radius, 180, 8});
        return Claim{"convolution nonvanishing", "(f*H_t)(z)/z != 0 for f with z f'/f = sqrt(1+z^3)", v.threshold,
                     v.min_modulus, grid_status(v.passes),
                     "min at t = " + format_double(v.worst_t) + (v.worst_sign > 0 ? " (+)" : " (-)") + ", |z| <= " +
                         format_double(opts.radius) + ", " + std::to_string(v.evaluations) + " evaluations"};
    }));
    return rep;
}

/// Randomized falsification of the three sharp bounds.
inline VerificationReport verify_oracle(const VerifyOptions& opts = {}) {
    VerificationReport rep;
    rep.command = "oracle";
    auto funcs = opts.oracle_functionals;
    if (funcs.empty())
        funcs = {FunctionalId{FunctionalTag::H3_1}, FunctionalId{FunctionalTag::H2_3},
                 FunctionalId{FunctionalTag::ZALCMAN_3}};
    for (const auto& id : funcs) {
        const std::string F = detail::functional_label(id);
        auto t0 = std::chrono::steady_clock::now();
        auto r = sample_sup(id, opts.samples, opts.seed, {opts.boundary, opts.jobs});
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        auto b = r.bound;
        Claim c;
        c.id = F + " oracle";
        c.statement = std::to_string(r.samples) + " seeded samples" + (b ? " never exceed " + to_string(*b) : "");
        c.computed = r.sample_max;
        c.runtime_ms = ms;
        c.note = "exceedances " + std::to_string(r.exceedances) + ", seed " + std::to_string(r.seed);
        if (b) {
            c.expected = *b;
            c.status = r.exceedances == 0 ? ClaimStatus::oracle_consistent : ClaimStatus::failed;
        } else {
            c.status = ClaimStatus::oracle_consistent;
        }
        rep.add(std::move(c));

        Claim w;
        w.id = F + " oracle witness";
        w.statement = "a fixed parameter point attains the bound exactly";
        w.computed = r.witness_max ? ClaimValue(*r.witness_max) : ClaimValue(std::sqrt(to_double(r.witness_norm)));
        if (b) {
            w.expected = *b;
            w.status = detail::certified_if(r.witness_norm == *b * *b);
        } else {
            w.status = ClaimStatus::certified;
        }
        const auto& pt = r.witness_argmax;
        w.note = "(p, gamma, eta, rho) = (" + to_string(pt.p) + ", " + to_string(pt.gamma.re) + ", " +
                 to_string(pt.eta.re) + ", " + to_string(pt.rho.re) + ")";
        rep.add(std::move(w));
    }
    return rep;
}

inline VerificationReport verify_all(const VerifyOptions& opts = {}) {
    VerificationReport rep;
    rep.command = "all";
    rep.append(verify_identities(opts));
    rep.append(verify_bound({FunctionalTag::H3_1}, opts));
    rep.append(verify_bound({FunctionalTag::H2_3}, opts));
    rep.append(verify_zalcman(opts));
    rep.append(verify_roots(opts));
    rep.append(verify_membership(opts));
    rep.append(verify_convolution(opts));
    rep.append(verify_oracle(opts));
    return rep;
}

}  // namespace slh
