#pragma once

#include "slh/boxopt.hpp"
#include "slh/functionals.hpp"
#include "slh/polyparse.hpp"
#include "slh/sturm.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace slh {

/// The closed cuboid [0,2] x [0,1] x [0,1] in (p, x, y).
inline BoxRegion parameter_cuboid() { return BoxRegion({"p", "x", "y"}, {{0, 2}, {0, 1}, {0, 1}}); }

/// A value quoted in the source derivation, kept as the printed digit string.
struct PrintedValue {
    std::string text;
    Rational value;
    /// The printed value is an exact rational rather than a rounded decimal.
    bool exact = false;

    static PrintedValue decimal(const std::string& t) { return {t, parse_rational(t), false}; }
    static PrintedValue rational(const std::string& t) { return {t, parse_rational(t), true}; }

    /// Half a unit in the last printed decimal place (0 for exact values).
    Rational half_unit() const {
        if (exact) return 0;
        auto dot = text.find('.');
        std::size_t places = dot == std::string::npos ? 0 : text.size() - dot - 1;
        mpz_class den = 1;
        for (std::size_t i = 0; i < places; ++i) den *= 10;
        return Rational(mpz_class(1), 2 * den);
    }

    /// Some point of `iv` rounds to the printed digits.
    bool agrees_with(const RatInterval& iv) const {
        Rational h = half_unit();
        return iv.lo - h <= value && value <= iv.hi + h;
    }
};

struct EdgeRow {
    /// e.g. "x=0,y=0".
    std::string label;
    std::string free_var;
    RatPoly restriction;
    CertifiedMax max;
    /// Location of the maximum from root isolation of the derivative (or an endpoint).
    Rational argmax;
    std::vector<PrintedValue> printed;
    std::optional<PrintedValue> printed_at;
};

struct FaceRow {
    std::string label;
    RatPoly restriction;
    CertifiedMax max;
    /// Largest certified lower bound over the face's four edges.
    Rational boundary_max;
};

/// Argmax of a univariate polynomial over [lo, hi] among the endpoints and the
/// isolated critical points (midpoints of isolating intervals of width <= 1e-12).
inline Rational univariate_argmax(const RatPoly& f, const RatInterval& range) {
    UPoly c = to_upoly(f);
    Rational best_t = range.lo;
    Rational best_v = upoly::eval(c, range.lo);
    auto consider = [&](const Rational& t) {
        Rational v = upoly::eval(c, t);
        if (v > best_v) {
            best_v = v;
            best_t = t;
        }
    };
    consider(range.hi);
    UPoly d = upoly::derivative(c);
    if (!d.empty() && upoly::degree(d) >= 1) {
        auto roots = isolate_roots(RatPoly::from_univariate("t", d), range, parse_rational("1e-12"));
        for (const auto& r : roots.roots) consider(r.interval.midpoint());
    }
    return best_t;
}

namespace detail {

struct EdgeSpec {
    std::string label;
    std::vector<std::pair<std::string, long>> fixed;
    std::vector<PrintedValue> printed;
    std::optional<PrintedValue> at;
};

inline std::vector<EdgeSpec> edge_specs(const FunctionalId& id) {
    auto D = PrintedValue::decimal;
    auto Q = PrintedValue::rational;
    if (id.tag == FunctionalTag::H3_1) {
        return {
            {"x=0,y=0", {{"x", 0}, {"y", 0}}, {D("0.00596162")}, D("1.43285")},
            {"x=0,y=1", {{"x", 0}, {"y", 1}}, {Q("1/36")}, Q("0")},
            {"x=1,y=0", {{"x", 1}, {"y", 0}}, {D("0.0225817")}, D("1.2008")},
            {"x=1,y=1", {{"x", 1}, {"y", 1}}, {D("0.0225817")}, D("1.2008")},
            {"p=0,x=0", {{"p", 0}, {"x", 0}}, {Q("1/36")}, Q("1")},
            {"p=0,x=1", {{"p", 0}, {"x", 1}}, {Q("1/64")}, std::nullopt},
            {"p=2,x=0", {{"p", 2}, {"x", 0}}, {Q("29/36864")}, std::nullopt},
            {"p=2,x=1", {{"p", 2}, {"x", 1}}, {Q("29/36864")}, std::nullopt},
            {"p=0,y=0", {{"p", 0}, {"y", 0}}, {D("0.0170103")}, D("0.816496580927726")},
            {"p=0,y=1", {{"p", 0}, {"y", 1}}, {Q("1/36")}, Q("0")},
            {"p=2,y=0", {{"p", 2}, {"y", 0}}, {Q("29/36864")}, std::nullopt},
            {"p=2,y=1", {{"p", 2}, {"y", 1}}, {Q("29/36864")}, std::nullopt},
        };
    }
    if (id.tag == FunctionalTag::H2_3) {
        return {
            {"x=0,y=0", {{"x", 0}, {"y", 0}}, {D("0.00198843")}, D("1.43351")},
            {"x=0,y=1", {{"x", 0}, {"y", 1}}, {Q("1/36")}, Q("0")},
            {"x=1,y=0", {{"x", 1}, {"y", 0}}, {D("0.00576045"), D("0.0057645")}, D("1.39838")},
            {"x=1,y=1", {{"x", 1}, {"y", 1}}, {D("0.00576045"), D("0.0057645")}, D("1.39838")},
            {"p=0,x=0", {{"p", 0}, {"x", 0}}, {Q("1/36")}, Q("1")},
            {"p=0,x=1", {{"p", 0}, {"x", 1}}, {Q("0")}, std::nullopt},
            {"p=2,x=0", {{"p", 2}, {"x", 0}}, {Q("5/18432")}, std::nullopt},
            {"p=2,x=1", {{"p", 2}, {"x", 1}}, {Q("5/18432")}, std::nullopt},
            {"p=0,y=0", {{"p", 0}, {"y", 0}}, {D("0.0120281306")}, D("0.577350269189626")},
            {"p=0,y=1", {{"p", 0}, {"y", 1}}, {Q("1/36")}, Q("0")},
            {"p=2,y=0", {{"p", 2}, {"y", 0}}, {Q("5/18432")}, std::nullopt},
            {"p=2,y=1", {{"p", 2}, {"y", 1}}, {Q("5/18432")}, std::nullopt},
        };
    }
    throw std::invalid_argument("edge_table: no surrogate for " + id.name());
}

}  // namespace detail

/// Certified maxima of the surrogate on the twelve cuboid edges.
inline std::vector<EdgeRow> edge_table(const FunctionalId& id, const CertifyOptions& opts = {}) {
    RatPoly S = bound_surrogate(id).surrogate;
    BoxRegion cube = parameter_cuboid();
    std::vector<EdgeRow> rows;
    for (auto& spec : detail::edge_specs(id)) {
        EdgeRow row;
        row.label = spec.label;
        RatPoly r = S;
        std::vector<std::string> fixed_names;
        for (const auto& [name, val] : spec.fixed) {
            r = face_restrict(r, cube, name, val);
            fixed_names.push_back(name);
        }
        BoxRegion edge = drop_sides(cube, fixed_names);
        row.free_var = edge.vars.at(0);
        row.restriction = r.with_vars(edge.vars);
        row.max = certify_max(row.restriction, edge, opts);
        row.argmax = univariate_argmax(row.restriction, edge.sides[0]);
        row.printed = spec.printed;
        row.printed_at = spec.at;
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Certified maxima of the surrogate on the six cuboid faces.
inline std::vector<FaceRow> face_table(const FunctionalId& id, const CertifyOptions& opts = {},
                                       const std::vector<EdgeRow>* edges = nullptr) {
    RatPoly S = bound_surrogate(id).surrogate;
    BoxRegion cube = parameter_cuboid();
    std::vector<EdgeRow> own;
    if (edges == nullptr) {
        own = edge_table(id, opts);
        edges = &own;
    }
    const std::vector<std::pair<std::string, long>> faces{{"p", 0}, {"p", 2}, {"x", 0}, {"x", 1}, {"y", 0}, {"y", 1}};
    std::vector<FaceRow> rows;
    for (const auto& [name, val] : faces) {
        FaceRow row;
        row.label = name + "=" + std::to_string(val);
        BoxRegion face = drop_sides(cube, {name});
        row.restriction = face_restrict(S, cube, name, val).with_vars(face.vars);
        row.max = certify_max(row.restriction, face, opts);
        bool have = false;
        for (const auto& e : *edges) {
            if (e.label.find(row.label) == std::string::npos) continue;
            if (!have || e.max.enclosure.lo > row.boundary_max) row.boundary_max = e.max.enclosure.lo;
            have = true;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Outcome of testing the two strict inequalities under which the interior
/// y-stationary point lies in (0, 1).
struct FeasibilityReport {
    /// A(p, x) < 0 is the first inequality, B(p, x) > 0 the second.
    RatPoly a;
    RatPoly b;
    bool feasible = false;
    std::optional<std::pair<Rational, Rational>> witness;
    Rational a_at_witness;
    Rational b_at_witness;
    /// The stationary y of the surrogate at the witness (derived from d/dy directly).
    Rational y_stationary;
    /// min over x in [0,1] of the p^2 threshold implied by B > 0, and where it is attained.
    Rational threshold_min;
    Rational threshold_argmin;
    /// Monotonicity certificate: numerator of the threshold derivative (a constant).
    Rational threshold_derivative_numerator;
    /// Counterexample (p, x) with p >= 1 to the separating inequality c p^3 >= k p^2 (1 - x), if any.
    std::optional<std::pair<Rational, Rational>> separating_counterexample;
};

/// Searches (0,2) x (0,1) on a dyadic grid for a point satisfying both inequalities and
/// checks the side claims used to rule them out.
inline FeasibilityReport critical_point_feasibility(const FunctionalId& id, int grid = 64) {
    const std::vector<std::string> v{"p", "x"};
    FeasibilityReport r;
    long k216 = 0, c_sep = 0, lin = 0;
    if (id.tag == FunctionalTag::H3_1) {
        r.a = parse_ratpoly("p^3*(7+108*x)+4*p*x*(4-p^2)*(19+4*x)+32*(1-x)*(8-x)*(4-p^2)-216*p^2*(1-x)", v);
        r.b = parse_ratpoly("27*p^2-4*(4-p^2)*(8-x)", v);
        k216 = 216, c_sep = 7, lin = 59;
    } else if (id.tag == FunctionalTag::H2_3) {
        r.a = parse_ratpoly("p^3*(5+36*x)+4*p*x*(4-p^2)*(5+4*x)+32*(1-x)*(8-x)*(4-p^2)-72*p^2*(1-x)", v);
        r.b = parse_ratpoly("9*p^2-4*(4-p^2)*(8-x)", v);
        k216 = 72, c_sep = 5, lin = 41;
    } else {
        throw std::invalid_argument("critical_point_feasibility: no surrogate for " + id.name());
    }

    for (int i = 1; i < 2 * grid && !r.feasible; ++i) {
        for (int j = 1; j < grid; ++j) {
            Rational p(i, grid), x(j, grid);
            p.canonicalize();
            x.canonicalize();
            Rational av = r.a.eval({p, x}), bv = r.b.eval({p, x});
            if (av < 0 && bv > 0) {
                r.feasible = true;
                r.witness = {p, x};
                r.a_at_witness = av;
                r.b_at_witness = bv;
                break;
            }
        }
    }
    if (r.witness) {
        RatPoly dy = bound_surrogate(id).surrogate.derivative("y");
        RatPoly slope = dy.derivative("y"), offset = dy.substitute("y", 0);
        std::map<std::string, Rational> at{{"p", r.witness->first}, {"x", r.witness->second}, {"y", 0}};
        r.y_stationary = -offset.eval(at) / slope.eval(at);
    }

    // B > 0  <=>  p^2 > 16(8-x)/(lin - 4x); derivative numerator is -16*lin + 64*8 (x-free).
    r.threshold_derivative_numerator = Rational(-16 * lin + 512);
    Rational t0(16 * 8, lin), t1(16 * 7, lin - 4);
    t0.canonicalize();
    t1.canonicalize();
    bool decreasing = r.threshold_derivative_numerator < 0;
    r.threshold_min = decreasing ? t1 : t0;
    r.threshold_argmin = decreasing ? 1 : 0;

    for (int i = grid; i <= 2 * grid && !r.separating_counterexample; ++i) {
        for (int j = 0; j <= grid; ++j) {
            Rational p(i, grid), x(j, grid);
            p.canonicalize();
            x.canonicalize();
            if (c_sep * p * p * p < k216 * p * p * (1 - x)) {
                r.separating_counterexample = {p, x};
                break;
            }
        }
    }
    return r;
}

}  // namespace slh
