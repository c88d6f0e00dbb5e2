#pragma once

#include "slh/boxopt.hpp"
#include "slh/functionals.hpp"
#include "slh/polyparse.hpp"

#include <string>
#include <vector>

namespace slh {

/// Removes the largest power of `var` dividing every term of f.
inline RatPoly strip_var_power(const RatPoly& f, const std::string& var) {
    int i = f.var_index(var);
    if (i < 0 || f.is_zero()) return f;
    auto k = static_cast<std::size_t>(i);
    int common = -1;
    for (const auto& [m, c] : f.terms()) common = common < 0 ? m[k] : std::min(common, m[k]);
    if (common <= 0) return f;
    RatPoly::TermMap t;
    for (const auto& [m, c] : f.terms()) {
        Monomial d = m;
        d[k] -= common;
        t[d] = c;
    }
    return RatPoly::from_terms(f.vars(), t);
}

/// a = lambda * b for some nonzero rational lambda (or both zero).
inline bool proportional(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    auto vars = RatPoly::union_vars(a.vars(), b.vars());
    RatPoly x = a.with_vars(vars), y = b.with_vars(vars);
    const auto& [m, c] = *x.terms().begin();
    auto it = y.terms().find(m);
    if (it == y.terms().end()) return false;
    return x == y * RatPoly(c / it->second);
}

enum class DisplayRelation {
    /// derived == printed.
    equal,
    /// derived == lambda * printed, lambda a nonzero constant.
    proportional,
    /// derived must be the zero polynomial (printed unused).
    vanishes
};

struct DisplayCheck {
    std::string label;
    DisplayRelation relation = DisplayRelation::equal;
    RatPoly derived;
    RatPoly printed;
    bool matches = false;
};

namespace detail {

inline DisplayCheck make_check(std::string label, DisplayRelation rel, RatPoly derived, RatPoly printed) {
    DisplayCheck c{std::move(label), rel, std::move(derived), std::move(printed), false};
    switch (rel) {
        case DisplayRelation::equal: c.matches = c.derived == c.printed; break;
        case DisplayRelation::proportional: c.matches = proportional(c.derived, c.printed); break;
        case DisplayRelation::vanishes: c.matches = c.derived.is_zero(); break;
    }
    return c;
}

/// dy = A(p) y + B(p) stationary in y; returns the polynomial in p obtained by
/// substituting y = -B/A into g(p, y) = g2 y^2 + g1 y + g0, after cancelling
/// gcd(A, B) and clearing the denominator A^2.
inline RatPoly eliminate_linear_y(const RatPoly& dy, const RatPoly& g) {
    UPoly a = to_upoly(dy.derivative("y").trimmed());
    UPoly b = to_upoly(dy.substitute("y", 0).trimmed());
    UPoly common = upoly::gcd(a, b);
    a = upoly::divmod(a, common).first;
    b = upoly::divmod(b, common).first;
    UPoly g2 = to_upoly((g.derivative("y").derivative("y") * RatPoly(Rational(1, 2))).trimmed());
    UPoly g1 = to_upoly(g.derivative("y").substitute("y", 0).trimmed());
    UPoly g0 = to_upoly(g.substitute("y", 0).trimmed());
    RatPoly A = RatPoly::from_univariate("p", a), B = RatPoly::from_univariate("p", b);
    RatPoly G2 = RatPoly::from_univariate("p", g2), G1 = RatPoly::from_univariate("p", g1),
            G0 = RatPoly::from_univariate("p", g0);
    return G2 * B * B - G1 * A * B + G0 * A * A;
}

/// For dF/dy = alpha y + beta: alpha * num + beta * den, zero iff y = num/den is the stationary point.
inline RatPoly stationary_residual(const RatPoly& dy, const RatPoly& num, const RatPoly& den) {
    RatPoly alpha = dy.derivative("y");
    RatPoly beta = dy.substitute("y", 0);
    return (alpha * num + beta * den).trimmed();
}

}  // namespace detail

/// Restrictions, derivatives and eliminations of the surrogate compared with their printed displays.
inline std::vector<DisplayCheck> display_checks(const FunctionalId& id) {
    using detail::make_check;
    using R = DisplayRelation;
    const auto& v = surrogate_vars();
    auto P = [&](const char* s) { return parse_ratpoly(s, v); };
    RatPoly S = bound_surrogate(id).surrogate;
    auto at = [&](std::initializer_list<std::pair<const char*, long>> fix) {
        RatPoly r = S;
        for (auto [name, val] : fix) r = r.substitute(name, val);
        return r.with_vars(v);
    };
    auto w = [&](const RatPoly& f) { return f.with_vars(v); };
    std::vector<DisplayCheck> out;

    if (id.tag == FunctionalTag::H3_1) {
        RatPoly h2 = at({{"x", 0}});
        RatPoly h4 = at({{"y", 0}});
        RatPoly dGy = S.derivative("y");
        out.push_back(make_check("G(0,x,y)", R::equal, at({{"p", 0}}),
                                 P("(2*(1-x^2)*(y^2*(x-1)*(x-8)+9*x)+9*x^3)/576")));
        out.push_back(make_check("d/dy G(0,x,y)", R::equal, w(at({{"p", 0}}).derivative("y")),
                                 P("y*(1-x^2)*(x-1)*(x-8)/144")));
        out.push_back(make_check("G(2,x,y)", R::equal, at({{"p", 2}}), P("29/36864")));
        out.push_back(make_check("G(p,0,y)", R::equal, h2,
                                 P("(128*y^2*(512-364*p^2+59*p^4)+224*p^3*y*(4-p^2)+13824*p^2-3456*p^4+29*p^6)/2359296")));
        out.push_back(make_check("y-stationary point of G(p,0,y)", R::vanishes,
                                 w(detail::stationary_residual(h2.derivative("y"), P("-7*p^3"), P("8*(128-59*p^2)"))),
                                 RatPoly()));
        out.push_back(make_check("d/dp G(p,0,y) / p", R::proportional, w(strip_var_power(h2.derivative("p"), "p")),
                                 P("256*y^2*(-182+59*p^2)-112*y*(-12*p+5*p^3)+87*p^4-6912*p^2+13824")));
        out.push_back(make_check("elimination of y on the face x=0", R::proportional,
                                 w(strip_var_power(detail::eliminate_linear_y(h2.derivative("y"), h2.derivative("p")), "p")),
                                 P("75497472-107347968*p^2+51265024*p^4-8426096*p^6+95167*p^8")));
        out.push_back(make_check("G(p,1,y)", R::equal, at({{"x", 1}}), P("(36864+22784*p^2-7920*p^4+9*p^6)/2359296")));
        out.push_back(make_check("d/dp G(p,1,y)", R::proportional, w(at({{"x", 1}}).derivative("p")),
                                 P("45568*p-31680*p^3+54*p^5")));
        out.push_back(make_check("G(p,x,0)", R::equal, h4,
                                 P("(29*p^6+(4-p^2)*((4-p^2)*(944*p^2*x^2+640*p^2*x^3-2304*x^3+128*p^2*x^4+4608*x)"
                                   "+116*p^4*x+752*p^4*x^2+864*p^4*x^3+3456*p^2*x^2))/2359296")));
        out.push_back(make_check("d/dx G(p,x,0)", R::equal, w(h4.derivative("x")),
                                 P("((8192*p^2-576*p^4+512*p^6)*x^3+(30720*p^2-4992*p^4-672*p^6)*x^2"
                                   "+(30208*p^2-9088*p^4+384*p^6)*x+73728-36864*p^2+5072*p^4-116*p^6)/2359296")));
        out.push_back(make_check("d/dp G(p,x,0)", R::equal, w(h4.derivative("p")),
                                 P("((4096*p-4096*p^3+768*p^5)*x^4+(3840*p-6656*p^3-1344*p^5)*x^3"
                                   "+(30208*p-18176*p^3+1152*p^5)*x^2+(-73728*p+20288*p^3-696*p^5)*x"
                                   "+1344*p-13824*p^3+174*p^5)/2359296")));
        out.push_back(make_check(
            "G(p,x,1)", R::equal, at({{"y", 1}}),
            P("(29*p^6+(4-p^2)*(116*p^4*x+752*p^4*x^2+3456*p^2*x^2+864*p^4*x^3"
              "+(1-x^2)*(224*p^3+3456*p^2*x+3456*p^3*x)+(4-p^2)*((1-x^2)*(2432*p*x"
              "+512*p*x^2+4096+512*x^2)+944*p^2*x^2+640*p^2*x^3+2304*x^3+128*p^2*x^4)))/2359296")));
        out.push_back(make_check("G(p,0,0)", R::equal, at({{"x", 0}, {"y", 0}}),
                                 P("(29*p^6-3456*p^4+13824*p^2)/2359296")));
        out.push_back(make_check("G(p,0,1)", R::equal, at({{"x", 0}, {"y", 1}}),
                                 P("(65536-32768*p^2+896*p^3+4096*p^4-224*p^5+29*p^6)/2359296")));
        out.push_back(make_check("G(0,0,y)", R::equal, at({{"p", 0}, {"x", 0}}), P("y^2/36")));
        out.push_back(make_check("G(0,1,y)", R::equal, at({{"p", 0}, {"x", 1}}), P("1/64")));
        out.push_back(make_check("G(0,x,1)", R::equal, at({{"p", 0}, {"y", 1}}), P("(16-4*x^2+9*x^3-2*x^4)/576")));
        out.push_back(make_check("G(0,x,0)", R::equal, at({{"p", 0}, {"y", 0}}), P("-(x^2-2)/64")));
        out.push_back(make_check("d/dy G", R::equal, w(dGy),
                                 P("(4-p^2)*(1-x^2)*(8*y*(x-1)*(4*(4-p^2)*(x-8)+27*p^2)"
                                   "+p*(4*x*(4-p^2)*(19+4*x)+p^2*(7+108*x)))/73728")));
        out.push_back(make_check("interior y-stationary point of G", R::vanishes,
                                 w(detail::stationary_residual(dGy, P("p*(4*x*(4-p^2)*(19+4*x)+p^2*(7+108*x))"),
                                                               P("4*(x-1)*(4*(4-p^2)*(8-x)-27*p^2)"))),
                                 RatPoly()));
    } else if (id.tag == FunctionalTag::H2_3) {
        RatPoly k2 = at({{"x", 0}});
        RatPoly k4 = at({{"y", 0}});
        RatPoly dFy = S.derivative("y");
        out.push_back(make_check("F(0,x,y)", R::equal, at({{"p", 0}}), P("(1-x^2)/288*(y^2*(x-1)*(x-8)+9*x)")));
        out.push_back(make_check("d/dy F(0,x,y)", R::equal, w(at({{"p", 0}}).derivative("y")),
                                 P("y*(1-x^2)*(x-1)*(x-8)/144")));
        out.push_back(make_check("F(2,x,y)", R::equal, at({{"p", 2}}), P("5/18432")));
        out.push_back(make_check("F(p,0,y)", R::equal, k2,
                                 P("(64*y^2*(512-292*p^2+41*p^4)+80*p^3*y*(4-p^2)+2304*p^2-576*p^4+5*p^6)/1179648")));
        out.push_back(make_check("y-stationary point of F(p,0,y)", R::vanishes,
                                 w(detail::stationary_residual(k2.derivative("y"), P("5*p^3"), P("8*(41*p^2-128)"))),
                                 RatPoly()));
        out.push_back(make_check("d/dp F(p,0,y) / p", R::proportional, w(strip_var_power(k2.derivative("p"), "p")),
                                 P("y^2*(5248*p^2-18688)+40*y*(12*p-50*p^3)+2304-1152*p^2+15*p^4")));
        out.push_back(make_check("elimination of y on the face x=0", R::proportional,
                                 w(strip_var_power(detail::eliminate_linear_y(k2.derivative("y"), k2.derivative("p")), "p")),
                                 P("1048576-1196032*p^2+449216*p^4-57582*p^6+615*p^8")));
        out.push_back(make_check("F(p,1,y)", R::equal, at({{"x", 1}}), P("(7168*p^2-2000*p^4+57*p^6)/1179648")));
        out.push_back(make_check(
            "F(p,x,0)", R::equal, k4,
            P("(5*p^6+(4-p^2)*((4-p^2)*(2304*x*(1-x^2)+80*p^2*x^2+160*p^2*x^3+64*p^2*x^4)+4*p^4*x"
              "+576*p^2*x^2+104*p^4*x^2+144*p^4*x^3+576*p^2*(1-x^2)))/1179648")));
        out.push_back(make_check("d/dp F(p,x,0)", R::equal, w(k4.derivative("p")),
                                 P("(2304*p-1152*p^3+15*p^5+(-18432*p+4640*p^3-12*p^5)*x+(1280*p-448*p^3-72*p^5)*x^2"
                                   "+(20992*p-6016*p^3+48*p^5)*x^3+(1024*p-1024*p^3+192*p^5)*x^4)/589824")));
        out.push_back(make_check("d/dx F(p,x,0)", R::equal, w(k4.derivative("x")),
                                 P("((p^2-4)*((-256*p^2+64*p^4)*x^3+(6912-2208*p^2+12*p^4)*x^2"
                                   "+(-160*p^2-12*p^4)*x-2304+576*p^2-p^4))/294912")));
        out.push_back(make_check(
            "F(p,x,1)", R::equal, at({{"y", 1}}),
            P("(5*p^6+(4-p^2)*((4-p^2)*(80*p^2*x^2+64*p^2*x^4+160*p^2*x^3+(1-x^2)*(256*p*x^2+320*p*x"
              "+256*(8+x^2)))+4*p^4*x+104*p^4*x^2+576*p^2*x^2+144*p^4*x^3+(1-x^2)*(80*p^3+576*p^3*x"
              "+576*p^2*x)))/1179648")));
        out.push_back(make_check("F(p,0,0)", R::equal, at({{"x", 0}, {"y", 0}}),
                                 P("(5*p^6-576*p^4+2304*p^2)/1179648")));
        out.push_back(make_check("F(p,0,1)", R::equal, at({{"x", 0}, {"y", 1}}),
                                 P("(32768-16384*p^2+320*p^3+2048*p^4-80*p^5+5*p^6)/1179648")));
        out.push_back(make_check("F(0,0,y)", R::equal, at({{"p", 0}, {"x", 0}}), P("y^2/36")));
        out.push_back(make_check("F(0,1,y)", R::equal, at({{"p", 0}, {"x", 1}}), P("0")));
        out.push_back(make_check("F(0,x,1)", R::equal, at({{"p", 0}, {"y", 1}}), P("(8-7*x^2-x^4)/288")));
        out.push_back(make_check("F(0,x,0)", R::equal, at({{"p", 0}, {"y", 0}}), P("x*(1-x^2)/32")));
        out.push_back(make_check("d/dy F", R::equal, w(dFy),
                                 P("(4-p^2)*(1-x^2)*(8*y*(x-1)*(4*(4-p^2)*(x-8)+9*p^2)"
                                   "+p*(4*x*(4-p^2)*(5+4*x)+p^2*(5+36*x)))/73728")));
        out.push_back(make_check("interior y-stationary point of F", R::vanishes,
                                 w(detail::stationary_residual(dFy, P("p*(4*x*(4-p^2)*(5+4*x)+p^2*(5+36*x))"),
                                                               P("8*(x-1)*(4*(4-p^2)*(8-x)-9*p^2)"))),
                                 RatPoly()));
    } else {
        throw std::invalid_argument("display_checks: no displays for " + id.name());
    }
    return out;
}

}  // namespace slh
