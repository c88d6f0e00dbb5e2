#pragma once

#include "slh/ratpoly.hpp"

#include <map>
#include <string>

namespace slh {

/// Complex-valued polynomial in real variables, held as (real part, imaginary part).
struct ComplexPoly {
    RatPoly re;
    RatPoly im;

    ComplexPoly() = default;
    ComplexPoly(RatPoly r, RatPoly i = RatPoly()) : re(std::move(r)), im(std::move(i)) {}  // NOLINT: real embeds
    ComplexPoly(const Rational& c) : re(c) {}                                              // NOLINT
    ComplexPoly(long c) : re(c) {}                                                         // NOLINT

    /// a + i b for real variables named a and b.
    static ComplexPoly cartesian(const std::string& real_name, const std::string& imag_name) {
        return {RatPoly::variable(real_name), RatPoly::variable(imag_name)};
    }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    ComplexPoly& operator+=(const ComplexPoly& o) { re += o.re; im += o.im; return *this; }
    ComplexPoly& operator-=(const ComplexPoly& o) { re -= o.re; im -= o.im; return *this; }
    friend ComplexPoly operator+(ComplexPoly a, const ComplexPoly& b) { return a += b; }
    friend ComplexPoly operator-(ComplexPoly a, const ComplexPoly& b) { return a -= b; }
    friend ComplexPoly operator-(const ComplexPoly& a) { return {-a.re, -a.im}; }
    friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const ComplexPoly& a, const ComplexPoly& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const ComplexPoly& a, const ComplexPoly& b) { return !(a == b); }

    ExactComplex eval(const std::map<std::string, Rational>& point) const {
        return {re.is_zero() ? Rational(0) : re.eval(point), im.is_zero() ? Rational(0) : im.eval(point)};
    }
};

inline ComplexPoly conj(const ComplexPoly& z) { return {z.re, -z.im}; }
/// |z|^2 = re^2 + im^2 as a real polynomial.
inline RatPoly norm(const ComplexPoly& z) { return z.re * z.re + z.im * z.im; }

template <>
struct Lift<ComplexPoly> {
    static ComplexPoly from(const Rational& q) { return ComplexPoly(q); }
};

}  // namespace slh
