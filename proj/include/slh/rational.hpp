#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace slh {

/// Exact rational number (GMP backed, always canonical).
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "3", "-7/12", "0.125", "1e-9", "2.5E+3" into an exact rational.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    if (auto slash = s.find('/'); slash != std::string::npos) {
        Rational q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("parse_rational: bad fraction '" + s + "'");
        if (q.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
        q.canonicalize();
        return q;
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string::npos) {
        try {
            std::size_t used = 0;
            exponent = std::stol(s.substr(e + 1), &used);
            if (used != s.size() - e - 1) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_rational: bad exponent in '" + s + "'");
        }
        s.resize(e);
    }
    bool negative = false;
    std::size_t pos = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        pos = 1;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_point = false;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (c == '.' && !seen_point) {
            seen_point = true;
        } else if (c >= '0' && c <= '9') {
            digits.push_back(c);
            if (seen_point) ++frac_digits;
        } else {
            throw std::invalid_argument("parse_rational: bad number '" + std::string(text) + "'");
        }
    }
    if (digits.empty()) throw std::invalid_argument("parse_rational: no digits in '" + std::string(text) + "'");
    mpz_class mantissa(digits, 10);
    long scale = exponent - frac_digits;
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    Rational q = scale >= 0 ? Rational(mantissa * ten_pow) : Rational(mantissa, ten_pow);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline std::string to_string(const Rational& q) { return q.get_str(10); }

/// Fixed-point decimal rendering with `digits` digits after the point (truncated toward zero).
inline std::string to_decimal(const Rational& q, int digits = 12) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class scaled = q.get_num() * scale;
    mpz_class quot;
    mpz_tdiv_q(quot.get_mpz_t(), scaled.get_mpz_t(), q.get_den().get_mpz_t());
    bool negative = quot < 0 || (quot == 0 && q < 0);
    mpz_class mag = quot;
    if (mag < 0) mag = -mag;
    std::string body = mag.get_str(10);
    if (digits == 0) return (negative ? "-" : "") + body;
    if (static_cast<int>(body.size()) <= digits) body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    return (negative ? "-" : "") + body;
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Exact rational value of a finite double.
inline Rational from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("from_double: non-finite value");
    Rational q(x);
    q.canonicalize();
    return q;
}

/// Complex number with exact rational real and imaginary parts.
struct ExactComplex {
    Rational re;
    Rational im;

    ExactComplex() = default;
    ExactComplex(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}  // NOLINT: implicit from real
    ExactComplex(long r) : re(r), im(0) {}                                            // NOLINT

    ExactComplex& operator+=(const ExactComplex& o) { re += o.re; im += o.im; return *this; }
    ExactComplex& operator-=(const ExactComplex& o) { re -= o.re; im -= o.im; return *this; }
    ExactComplex& operator*=(const ExactComplex& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    ExactComplex& operator/=(const ExactComplex& o) {
        Rational d = o.re * o.re + o.im * o.im;
        if (d == 0) throw std::domain_error("ExactComplex: division by zero");
        Rational r = (re * o.re + im * o.im) / d;
        im = (im * o.re - re * o.im) / d;
        re = std::move(r);
        return *this;
    }
    friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
    friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
    friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
    friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }
    friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }
    friend bool operator==(const ExactComplex& a, const ExactComplex& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }
};

inline ExactComplex conj(const ExactComplex& z) { return {z.re, -z.im}; }
/// |z|^2, exact.
inline Rational norm(const ExactComplex& z) { return z.re * z.re + z.im * z.im; }
inline std::complex<double> to_double(const ExactComplex& z) { return {to_double(z.re), to_double(z.im)}; }

/// Lifts rational constants into the scalar types used by the generic formulas.
template <class T>
struct Lift;

template <>
struct Lift<Rational> {
    static Rational from(const Rational& q) { return q; }
};

template <>
struct Lift<double> {
    static double from(const Rational& q) { return to_double(q); }
};

template <>
struct Lift<ExactComplex> {
    static ExactComplex from(const Rational& q) { return {q, 0}; }
};

template <>
struct Lift<std::complex<double>> {
    static std::complex<double> from(const Rational& q) { return {to_double(q), 0.0}; }
};

template <class T>
T lift(long num, long den = 1) {
    return Lift<T>::from(make_rational(num, den));
}

template <class T>
T lift(const Rational& q) {
    return Lift<T>::from(q);
}

}  // namespace slh
