#pragma once

#include "slh/complex_poly.hpp"
#include "slh/rational.hpp"

#include <complex>
#include <map>
#include <stdexcept>
#include <string>

namespace slh {

template <class R>
struct ComplexOf;
template <>
struct ComplexOf<Rational> {
    using type = ExactComplex;
};
template <>
struct ComplexOf<double> {
    using type = std::complex<double>;
};
template <>
struct ComplexOf<RatPoly> {
    using type = ComplexPoly;
};
template <class R>
using complex_of_t = typename ComplexOf<R>::type;

/// Parameters (p, gamma, eta, rho) of the first four Caratheodory coefficients.
/// p = p_1 is real in [0, 2]; gamma, eta, rho lie in the closed unit disk.
template <class R>
struct BasicParamPoint {
    R p;
    complex_of_t<R> gamma;
    complex_of_t<R> eta;
    complex_of_t<R> rho;
};

using ParamPoint = BasicParamPoint<Rational>;
using NumericParamPoint = BasicParamPoint<double>;

/// Validated exact parameter point; throws std::domain_error when p is outside
/// [0, 2] or a disk parameter has modulus above 1.
inline ParamPoint make_param_point(Rational p, ExactComplex gamma, ExactComplex eta = {}, ExactComplex rho = {}) {
    if (p < 0 || p > 2) throw std::domain_error("ParamPoint: p must lie in [0, 2]");
    if (norm(gamma) > 1) throw std::domain_error("ParamPoint: |gamma| > 1");
    if (norm(eta) > 1) throw std::domain_error("ParamPoint: |eta| > 1");
    if (norm(rho) > 1) throw std::domain_error("ParamPoint: |rho| > 1");
    return {std::move(p), std::move(gamma), std::move(eta), std::move(rho)};
}

inline NumericParamPoint make_param_point(double p, std::complex<double> gamma, std::complex<double> eta = {},
                                          std::complex<double> rho = {}) {
    constexpr double slack = 1e-12;
    if (p < 0 || p > 2) throw std::domain_error("ParamPoint: p must lie in [0, 2]");
    if (std::norm(gamma) > 1 + slack || std::norm(eta) > 1 + slack || std::norm(rho) > 1 + slack)
        throw std::domain_error("ParamPoint: disk parameter outside the closed unit disk");
    return {p, gamma, eta, rho};
}

template <class C>
struct CaratheodoryTail {
    C p1, p2, p3, p4;
};

template <class C>
struct SchlichtCoefficients {
    C a2, a3, a4, a5;
};

/// p_2, p_3, p_4 in terms of p_1 and the disk parameters.
template <class C>
CaratheodoryTail<C> tail_formulas(const C& p, const C& g, const C& e, const C& r) {
    using std::conj;
    using std::norm;
    const C one = lift<C>(1);
    const C four_minus = lift<C>(4) - p * p;
    const C g_sq_comp = one - C(norm(g));  // 1 - |gamma|^2
    const C e_sq_comp = one - C(norm(e));  // 1 - |eta|^2
    CaratheodoryTail<C> t;
    t.p1 = p;
    t.p2 = lift<C>(1, 2) * (p * p + g * four_minus);
    t.p3 = lift<C>(1, 4) * (p * p * p + lift<C>(2) * p * four_minus * g - p * four_minus * g * g +
                            lift<C>(2) * four_minus * g_sq_comp * e);
    C inner = p * p * (g * g - lift<C>(3) * g + lift<C>(3)) + lift<C>(4) * g;
    C eta_part = p * (g - one) * e + conj(g) * e * e - e_sq_comp * r;
    t.p4 = lift<C>(1, 8) * (p * p * p * p + four_minus * g * inner - lift<C>(4) * four_minus * g_sq_comp * eta_part);
    return t;
}

template <class R>
CaratheodoryTail<complex_of_t<R>> tail_from_params(const BasicParamPoint<R>& pt) {
    using C = complex_of_t<R>;
    return tail_formulas<C>(C(pt.p), pt.gamma, pt.eta, pt.rho);
}

/// a_2..a_5 of f with z f'/f = sqrt(p(z))-type subordination, in terms of p_1..p_4.
template <class C>
SchlichtCoefficients<C> coefficients_from_tail(const CaratheodoryTail<C>& t) {
    const C& p = t.p1;
    SchlichtCoefficients<C> a;
    a.a2 = lift<C>(1, 4) * p;
    a.a3 = lift<C>(1, 8) * t.p2 - lift<C>(3, 64) * p * p;
    a.a4 = lift<C>(1, 12) * t.p3 - lift<C>(7, 96) * p * t.p2 + lift<C>(13, 768) * p * p * p;
    a.a5 = lift<C>(-1, 16) * (lift<C>(49, 384) * p * p * p * p - lift<C>(17, 24) * p * p * t.p2 +
                              lift<C>(1, 2) * t.p2 * t.p2 + lift<C>(11, 12) * p * t.p3 - t.p4);
    return a;
}

/// Names of the seven real variables of the cartesian form.
inline const std::vector<std::string>& cartesian_vars() {
    static const std::vector<std::string> v{"p", "gr", "gi", "er", "ei", "rr", "ri"};
    return v;
}

enum class TailForm {
    /// p real; gamma = gr + i gi, eta = er + i ei, rho = rr + i ri.
    cartesian,
    /// p real; gamma = x, eta = y, rho = r restricted to nonnegative reals.
    modulus
};

/// Symbolic p1..p4 as complex polynomials: keys "p1", "p2", "p3", "p4".
inline std::map<std::string, ComplexPoly> symbolic_tail(TailForm form) {
    ComplexPoly p(RatPoly::variable("p"));
    ComplexPoly g, e, r;
    if (form == TailForm::cartesian) {
        g = ComplexPoly::cartesian("gr", "gi");
        e = ComplexPoly::cartesian("er", "ei");
        r = ComplexPoly::cartesian("rr", "ri");
    } else {
        g = ComplexPoly(RatPoly::variable("x"));
        e = ComplexPoly(RatPoly::variable("y"));
        r = ComplexPoly(RatPoly::variable("r"));
    }
    auto t = tail_formulas<ComplexPoly>(p, g, e, r);
    return {{"p1", t.p1}, {"p2", t.p2}, {"p3", t.p3}, {"p4", t.p4}};
}

/// Assignment of the cartesian variables for an exact parameter point.
inline std::map<std::string, Rational> cartesian_assignment(const ParamPoint& pt) {
    return {{"p", pt.p},          {"gr", pt.gamma.re}, {"gi", pt.gamma.im}, {"er", pt.eta.re},
            {"ei", pt.eta.im},    {"rr", pt.rho.re},   {"ri", pt.rho.im}};
}

}  // namespace slh
