#pragma once

#include "slh/caratheodory.hpp"
#include "slh/complex_poly.hpp"
#include "slh/polyparse.hpp"
#include "slh/ratpoly.hpp"

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace slh {

enum class FunctionalTag { H2_1, H2_2, H2_3, H3_1, ZALCMAN_3, HANKEL_GENERIC };

struct FunctionalId {
    FunctionalTag tag = FunctionalTag::H3_1;
    int q = 0;
    int n = 0;

    static FunctionalId hankel(int q, int n) {
        if (q < 1 || n < 1) throw std::invalid_argument("FunctionalId: Hankel order and index must be >= 1");
        return {FunctionalTag::HANKEL_GENERIC, q, n};
    }

    /// (q, n) of the determinant; Zalcman has none and reports (0, 0).
    std::pair<int, int> hankel_shape() const {
        switch (tag) {
            case FunctionalTag::H2_1: return {2, 1};
            case FunctionalTag::H2_2: return {2, 2};
            case FunctionalTag::H2_3: return {2, 3};
            case FunctionalTag::H3_1: return {3, 1};
            case FunctionalTag::HANKEL_GENERIC: return {q, n};
            case FunctionalTag::ZALCMAN_3: return {0, 0};
        }
        return {0, 0};
    }

    /// Largest coefficient index the functional reads.
    int max_index() const {
        if (tag == FunctionalTag::ZALCMAN_3) return 5;
        auto [qq, nn] = hankel_shape();
        return nn + 2 * qq - 2;
    }

    std::string name() const {
        switch (tag) {
            case FunctionalTag::H2_1: return "h21";
            case FunctionalTag::H2_2: return "h22";
            case FunctionalTag::H2_3: return "h23";
            case FunctionalTag::H3_1: return "h31";
            case FunctionalTag::ZALCMAN_3: return "zalcman";
            case FunctionalTag::HANKEL_GENERIC: return "hankel:" + std::to_string(q) + "," + std::to_string(n);
        }
        return "?";
    }

    friend bool operator==(const FunctionalId& a, const FunctionalId& b) {
        return a.tag == b.tag && a.hankel_shape() == b.hankel_shape();
    }
};

/// Accepts h21, h22, h23, h31, zalcman and hankel:q,n.
inline FunctionalId parse_functional(const std::string& s) {
    if (s == "h21") return {FunctionalTag::H2_1};
    if (s == "h22") return {FunctionalTag::H2_2};
    if (s == "h23") return {FunctionalTag::H2_3};
    if (s == "h31") return {FunctionalTag::H3_1};
    if (s == "zalcman") return {FunctionalTag::ZALCMAN_3};
    if (s.rfind("hankel:", 0) == 0) {
        auto comma = s.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("parse_functional: expected hankel:q,n");
        return FunctionalId::hankel(std::stoi(s.substr(7, comma - 7)), std::stoi(s.substr(comma + 1)));
    }
    throw std::invalid_argument("parse_functional: unknown functional '" + s + "'");
}

/// Division-free determinant by cofactor expansion along the first row.
template <class C>
C determinant(const std::vector<std::vector<C>>& m) {
    std::size_t n = m.size();
    if (n == 0) return lift<C>(1);
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    C acc = lift<C>(0);
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::vector<C>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<C> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c)
                if (c != col) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        C term = m[0][col] * determinant(minor);
        if (col % 2 == 0) acc = acc + term;
        else acc = acc - term;
    }
    return acc;
}

/// H_q(n) = det(a_{n+i+j})_{i,j=0..q-1}; `a[k]` holds a_k.
template <class C>
C hankel_determinant(std::span<const C> a, int q, int n) {
    if (q < 1 || n < 1) throw std::invalid_argument("hankel_determinant: q and n must be >= 1");
    auto need = static_cast<std::size_t>(n + 2 * q - 2);
    if (a.size() <= need)
        throw std::invalid_argument("hankel_determinant: need coefficients up to a_" + std::to_string(need));
    std::vector<std::vector<C>> m(static_cast<std::size_t>(q), std::vector<C>(static_cast<std::size_t>(q)));
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a[static_cast<std::size_t>(n + i + j)];
    return determinant(m);
}

/// Evaluates the functional on a coefficient vector with a[k] = a_k (a[1] = 1 for normalized f).
template <class C>
C evaluate_functional(const FunctionalId& id, std::span<const C> a) {
    if (static_cast<int>(a.size()) <= id.max_index())
        throw std::invalid_argument("evaluate_functional: " + id.name() + " needs coefficients up to a_" +
                                    std::to_string(id.max_index()));
    if (id.tag == FunctionalTag::ZALCMAN_3) return a[3] * a[3] - a[5];
    auto [q, n] = id.hankel_shape();
    return hankel_determinant<C>(a, q, n);
}

template <class C>
std::vector<C> coefficient_vector(const SchlichtCoefficients<C>& s) {
    return {lift<C>(0), lift<C>(1), s.a2, s.a3, s.a4, s.a5};
}

template <class C>
C evaluate_functional(const FunctionalId& id, const SchlichtCoefficients<C>& s) {
    auto v = coefficient_vector(s);
    return evaluate_functional<C>(id, std::span<const C>(v));
}

/// Variables of the raw expansion: p = p_1 and the formal symbols p2, p3, p4.
inline const std::vector<std::string>& raw_vars() {
    static const std::vector<std::string> v{"p", "p2", "p3", "p4"};
    return v;
}

/// Functional as a polynomial in (p, p2, p3, p4) after substituting the a_k formulas.
inline RatPoly raw_p_expansion(const FunctionalId& id) {
    CaratheodoryTail<RatPoly> t{RatPoly::variable("p"), RatPoly::variable("p2"), RatPoly::variable("p3"),
                                RatPoly::variable("p4")};
    return evaluate_functional<RatPoly>(id, coefficients_from_tail(t)).with_vars(raw_vars());
}

/// Common denominator of the displayed expansions and complex forms.
inline Rational display_scale(const FunctionalId& id) {
    switch (id.tag) {
        case FunctionalTag::H3_1: return 2359296;
        case FunctionalTag::H2_3: return 1179648;
        case FunctionalTag::ZALCMAN_3: return 1;
        default: throw std::invalid_argument("display_scale: no displayed form for " + id.name());
    }
}

/// The expansion exactly as displayed in the source derivation (transcribed, not computed).
inline RatPoly printed_raw_expansion(const FunctionalId& id) {
    const auto& v = raw_vars();
    switch (id.tag) {
        case FunctionalTag::H3_1:
            return parse_ratpoly("(689*p^6 - 3368*p^4*p2 + 3520*p^3*p3 + 24064*p*p2*p3 + 3008*p^2*p2^2"
                                 " - 16128*p^2*p4 - 13824*p2^3 - 16384*p3^2 + 18432*p2*p4) / 2359296",
                                 v);
        case FunctionalTag::H2_3:
            return parse_ratpoly("(103*p^6 - 712*p^4*p2 - 4608*p2^3 + 1984*p^2*p2^2 + 5888*p*p2*p3"
                                 " - 160*p^3*p3 - 8192*p3^2 - 3456*p^2*p4 + 9216*p2*p4) / 1179648",
                                 v);
        case FunctionalTag::ZALCMAN_3:
            return parse_ratpoly("125/12288*p^4 - 43/768*p^2*p2 + 3/64*p2^2 + 11/192*p*p3 - 1/16*p4", v);
        default: throw std::invalid_argument("printed_raw_expansion: no displayed form for " + id.name());
    }
}

// ---------------------------------------------------------------------------
// Complex forms: scale * functional = c0 + c1*eta + c2*eta^2 + c3*rho.

enum class Transcription {
    /// Coefficients that reassemble the functional exactly.
    corrected,
    /// Coefficients as printed, including the known slips.
    printed
};

template <class C>
std::array<C, 4> complex_form_parts(const FunctionalId& id, Transcription tr, const C& p, const C& g, const C& e) {
    using std::conj;
    using std::norm;
    auto k = [](long v) { return lift<C>(v); };
    const C q = k(4) - p * p;  // 4 - p^2
    const C p2 = p * p, p3 = p2 * p, p4 = p2 * p2, p6 = p4 * p2;
    const C g2 = g * g, g3 = g2 * g, g4 = g2 * g2;
    const C gabs2 = C(norm(g));
    const C cg = k(1) - gabs2;         // 1 - |gamma|^2
    const C ce = k(1) - C(norm(e));   // 1 - |eta|^2
    const C gbar = conj(g);
    const bool fixed = tr == Transcription::corrected;

    if (id.tag == FunctionalTag::H3_1) {
        C nu1 = k(29) * p6 + q * (q * (k(944) * p2 * g2 - k(640) * p2 * g3 - k(2304) * g3 + k(128) * p2 * g4) -
                                  k(116) * p4 * g + k(752) * p4 * g2 - k(3456) * p2 * g2 - k(864) * p4 * g3);
        C nu2 = q * cg * (k(224) * p3 + k(3456) * p3 * g + q * (k(2432) * p * g - k(512) * p * g2));
        C nu3 = fixed ? q * cg * (-(q * (k(4096) + k(512) * gabs2)) + k(3456) * p2 * gbar)
                      : q * cg * (q * (k(4096) - k(512) * gabs2) + k(3456) * p2 * gbar);
        C psi = q * cg * ce * (-(k(3456) * p2) + k(4608) * g * q);
        return {nu1, nu2, nu3, psi};
    }
    if (id.tag == FunctionalTag::H2_3) {
        C cubic = fixed ? k(16) * g3 * q : k(16) * g2 * q;
        C zeta1 = -(k(5) * p6) + k(4) * p2 * g * q *
                                     (-p2 - k(20) * q * g - k(26) * p2 * g + k(144) * g + k(36) * p2 * g2 + cubic +
                                      k(40) * g2 * q);
        C zeta2 = k(16) * p * q * cg * (-(k(5) * p2) - k(36) * p2 * g - k(16) * g2 * q - k(20) * g * q);
        C zeta3 = fixed ? k(64) * q * cg * (-(k(4) * q * (k(8) + gabs2)) - k(9) * p2 * gbar)
                        : k(64) * q * cg * (-(k(4) * q * (k(8) + g2)) - k(9) * p2 * g);
        C xi = k(576) * q * cg * ce * (p2 + k(4) * g * q);
        return {zeta1, zeta2, zeta3, xi};
    }
    throw std::invalid_argument("complex_form: no complex form for " + id.name());
}

struct ComplexFunctionalForm {
    Rational scale;
    /// eta^0, eta^1, eta^2 and rho coefficients over the cartesian variables.
    std::array<ComplexPoly, 4> parts;
};

inline ComplexFunctionalForm complex_form(const FunctionalId& id, Transcription tr = Transcription::corrected) {
    ComplexPoly p(RatPoly::variable("p"));
    auto g = ComplexPoly::cartesian("gr", "gi");
    auto e = ComplexPoly::cartesian("er", "ei");
    return {display_scale(id), complex_form_parts<ComplexPoly>(id, tr, p, g, e)};
}

/// c0 + c1 eta + c2 eta^2 + c3 rho - scale * (raw expansion at the cartesian tail); zero iff the form is exact.
inline ComplexPoly reassembly_residual(const FunctionalId& id, Transcription tr = Transcription::corrected) {
    auto form = complex_form(id, tr);
    auto e = ComplexPoly::cartesian("er", "ei");
    auto r = ComplexPoly::cartesian("rr", "ri");
    ComplexPoly assembled = form.parts[0] + form.parts[1] * e + form.parts[2] * e * e + form.parts[3] * r;

    auto tail = symbolic_tail(TailForm::cartesian);
    RatPoly raw = raw_p_expansion(id);
    std::vector<ComplexPoly> args{tail.at("p1"), tail.at("p2"), tail.at("p3"), tail.at("p4")};
    ComplexPoly direct = evaluate_generic<ComplexPoly>(raw, std::span<const ComplexPoly>(args));
    return assembled - ComplexPoly(form.scale) * direct;
}

/// The complex form evaluated exactly at a parameter point (already divided by the scale).
inline ExactComplex complex_form_value(const FunctionalId& id, Transcription tr, const ParamPoint& pt) {
    auto parts = complex_form_parts<ExactComplex>(id, tr, ExactComplex(pt.p), pt.gamma, pt.eta);
    ExactComplex s = parts[0] + parts[1] * pt.eta + parts[2] * pt.eta * pt.eta + parts[3] * pt.rho;
    return s / ExactComplex(display_scale(id));
}

/// Exact functional value at a parameter point through the coefficient formulas.
inline ExactComplex functional_at(const FunctionalId& id, const ParamPoint& pt) {
    return evaluate_functional<ExactComplex>(id, coefficients_from_tail(tail_from_params(pt)));
}

inline std::complex<double> functional_at(const FunctionalId& id, const NumericParamPoint& pt) {
    return evaluate_functional<std::complex<double>>(id, coefficients_from_tail(tail_from_params(pt)));
}

// ---------------------------------------------------------------------------
// Real majorants G (for H3_1) and F (for H2_3) in (p, x, y), x = |gamma|, y = |eta|.

inline const std::vector<std::string>& surrogate_vars() {
    static const std::vector<std::string> v{"p", "x", "y"};
    return v;
}

struct BoundSurrogate {
    Rational scale;
    /// Coefficients of 1, y, y^2 and (1 - y^2), each in (p, x).
    std::array<RatPoly, 4> parts;
    /// (parts[0] + parts[1] y + parts[2] y^2 + parts[3] (1 - y^2)) / scale.
    RatPoly surrogate;
};

inline BoundSurrogate bound_surrogate(const FunctionalId& id) {
    const auto& v = surrogate_vars();
    std::array<const char*, 4> text{};
    if (id.tag == FunctionalTag::H3_1) {
        text = {"29*p^6 + (4-p^2)*((4-p^2)*(944*p^2*x^2 + 640*p^2*x^3 + 2304*x^3 + 128*p^2*x^4)"
                " + 116*p^4*x + 752*p^4*x^2 + 3456*p^2*x^2 + 864*p^4*x^3)",
                "(4-p^2)*(1-x^2)*(224*p^3 + (4-p^2)*(2432*p*x + 512*p*x^2) + 3456*p^3*x)",
                "(4-p^2)*(1-x^2)*((4-p^2)*(4096 + 512*x^2) + 3456*p^2*x)",
                "(4-p^2)*(1-x^2)*(3456*p^2 + 4608*x*(4-p^2))"};
    } else if (id.tag == FunctionalTag::H2_3) {
        text = {"5*p^6 + 4*p^2*x*(4-p^2)*(p^2 + 20*(4-p^2)*x + 26*p^2*x + 144*x + 36*p^2*x^2"
                " + 16*x^3*(4-p^2) + 40*x^2*(4-p^2))",
                "16*p*(4-p^2)*(1-x^2)*(5*p^2 + 36*p^2*x + 16*x^2*(4-p^2) + 20*x*(4-p^2))",
                "64*(4-p^2)*(1-x^2)*(4*(4-p^2)*(8+x^2) + 9*p^2*x)",
                "576*(4-p^2)*(1-x^2)*(p^2 + 4*x*(4-p^2))"};
    } else {
        throw std::invalid_argument("bound_surrogate: no surrogate for " + id.name());
    }
    BoundSurrogate s;
    s.scale = display_scale(id);
    for (std::size_t i = 0; i < 4; ++i) s.parts[i] = parse_ratpoly(text[i], v);
    RatPoly y = RatPoly::variable("y");
    s.surrogate = (s.parts[0] + s.parts[1] * y + s.parts[2] * y * y + s.parts[3] * (RatPoly(1) - y * y)) *
                  RatPoly(Rational(1) / s.scale);
    s.surrogate = s.surrogate.with_vars(v);
    return s;
}

struct MajorizationCheck {
    /// |functional|^2 <= surrogate^2 and surrogate >= 0.
    bool holds = false;
    /// Termwise: |c_k| <= part_k (scaled), with the rho term against part_3 * (1 - y^2).
    std::array<bool, 4> part_holds{};
    ExactComplex value;
    Rational bound;
};

/// Exact majorization test at `pt`; requires |gamma| = x and |eta| = y exactly.
inline MajorizationCheck majorization_at(const FunctionalId& id, const BoundSurrogate& s, Transcription tr,
                                         const ParamPoint& pt, const Rational& x, const Rational& y) {
    if (x < 0 || y < 0 || norm(pt.gamma) != x * x || norm(pt.eta) != y * y)
        throw std::invalid_argument("majorization_at: x and y must equal |gamma| and |eta|");
    std::map<std::string, Rational> at{{"p", pt.p}, {"x", x}, {"y", y}};
    MajorizationCheck r;
    r.value = functional_at(id, pt);
    r.bound = s.surrogate.eval(at);
    r.holds = r.bound >= 0 && norm(r.value) <= r.bound * r.bound;
    auto parts = complex_form_parts<ExactComplex>(id, tr, ExactComplex(pt.p), pt.gamma, pt.eta);
    for (std::size_t k = 0; k < 4; ++k) {
        Rational cap = s.parts[k].eval(at);
        if (k == 3) cap *= 1 - y * y;
        r.part_holds[k] = cap >= 0 && norm(parts[k]) <= cap * cap;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Hermitian-form condition on (a, b, c, d).

struct HermitianParams {
    Rational a, b, c, d;
};

struct HermitianVerdict {
    bool holds = false;
    /// rhs - lhs.
    Rational margin;
    Rational lhs;
    Rational rhs;
};

/// 8d(1-d)((cb-2a)^2 + (c(d+c)-b)^2) + c(1-c)(b-2dc)^2 <= 4c^2(1-c)^2 d(1-d); requires 0 < c, d < 1.
inline HermitianVerdict hermitian_condition(const HermitianParams& q) {
    if (!(q.c > 0 && q.c < 1)) throw std::domain_error("hermitian_condition: c must lie in (0, 1)");
    if (!(q.d > 0 && q.d < 1)) throw std::domain_error("hermitian_condition: d must lie in (0, 1)");
    const Rational& a = q.a;
    const Rational& b = q.b;
    const Rational& c = q.c;
    const Rational& d = q.d;
    Rational t1 = c * b - 2 * a;
    Rational t2 = c * (d + c) - b;
    Rational t3 = b - 2 * d * c;
    HermitianVerdict v;
    v.lhs = 8 * d * (1 - d) * (t1 * t1 + t2 * t2) + c * (1 - c) * t3 * t3;
    v.rhs = 4 * c * c * (1 - c) * (1 - c) * d * (1 - d);
    v.margin = v.rhs - v.lhs;
    v.holds = v.margin >= 0;
    return v;
}

/// a p^4 + d p2^2 + 2c p p3 - (3/2) b p^2 p2 - p4, bounded by 2 in modulus when the condition holds.
inline RatPoly hermitian_normal_form(const HermitianParams& q) {
    RatPoly p = RatPoly::variable("p"), p2 = RatPoly::variable("p2"), p3 = RatPoly::variable("p3"),
            p4 = RatPoly::variable("p4");
    RatPoly f = RatPoly(q.a) * p.pow(4) + RatPoly(q.d) * p2 * p2 + RatPoly(2 * q.c) * p * p3 -
                RatPoly(Rational(3, 2) * q.b) * p * p * p2 - p4;
    return f.with_vars(raw_vars());
}

inline HermitianParams zalcman_hermitian_params() {
    return {make_rational(125, 768), make_rational(43, 72), make_rational(11, 24), make_rational(3, 4)};
}

/// |a_3^2 - a_5| <= (1/16) * 2. Throws std::logic_error if the expansion does not match the
/// normal form or the condition fails at the parameters.
inline Rational zalcman_bound_via_hermitian() {
    auto params = zalcman_hermitian_params();
    Rational factor(1, 16);
    if (raw_p_expansion({FunctionalTag::ZALCMAN_3}) != RatPoly(factor) * hermitian_normal_form(params))
        throw std::logic_error("zalcman_bound_via_hermitian: expansion is not (1/16) times the normal form");
    if (!hermitian_condition(params).holds) throw std::logic_error("zalcman_bound_via_hermitian: condition fails");
    return factor * 2;
}

}  // namespace slh
