#pragma once

#include "slh/rational.hpp"

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slh {

/// Power series a_0 + a_1 z + ... + a_N z^N, truncated at a fixed order N.
///
/// T is the coefficient field: Rational for the exact verification path,
/// std::complex<double> for grid evaluation of kernels with surd parameters.
template <class T>
class TruncatedSeries {
public:
    TruncatedSeries() : TruncatedSeries(1) {}
    explicit TruncatedSeries(int order) : coeffs_(check_order(order) + 1, lift<T>(0)) {}
    TruncatedSeries(int order, std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(check_order(order) + 1, lift<T>(0));
    }

    static TruncatedSeries constant(int order, const T& c) {
        TruncatedSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }
    /// c * z^k (zero when k > order).
    static TruncatedSeries monomial(int order, int k, const T& c = lift<T>(1)) {
        TruncatedSeries s(order);
        if (k <= order) s.coeffs_[static_cast<std::size_t>(k)] = c;
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<T>& coefficients() const { return coeffs_; }
    const T& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    T& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

    TruncatedSeries truncated(int order) const { return TruncatedSeries(order, coeffs_); }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        same_order(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        same_order(o);
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.same_order(b);
        TruncatedSeries r(a.order());
        auto n = a.coeffs_.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (a.coeffs_[i] == lift<T>(0)) continue;
            for (std::size_t j = 0; i + j < n; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return r;
    }
    friend TruncatedSeries operator*(const T& c, TruncatedSeries a) {
        for (auto& x : a.coeffs_) x = c * x;
        return a;
    }
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

    /// Coefficient-wise (Hadamard) product.
    friend TruncatedSeries hadamard(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.same_order(b);
        TruncatedSeries r(a.order());
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) r.coeffs_[k] = a.coeffs_[k] * b.coeffs_[k];
        return r;
    }

    /// Formal derivative; the result has order N - 1.
    TruncatedSeries derivative() const {
        if (order() < 2) throw std::invalid_argument("TruncatedSeries::derivative: order too small");
        TruncatedSeries r(order() - 1);
        for (int k = 1; k <= order(); ++k) r[k - 1] = lift<T>(k) * coeffs_[static_cast<std::size_t>(k)];
        return r;
    }

    /// s(z) * z^k, truncated at the same order.
    TruncatedSeries shifted_up(int k) const {
        TruncatedSeries r(order());
        for (int j = 0; j + k <= order(); ++j) r[j + k] = coeffs_[static_cast<std::size_t>(j)];
        return r;
    }

    /// s(z) / z^k; requires a_0 = ... = a_{k-1} = 0 and yields order N - k.
    TruncatedSeries shifted_down(int k) const {
        for (int j = 0; j < k; ++j)
            if (coeffs_[static_cast<std::size_t>(j)] != lift<T>(0))
                throw std::domain_error("TruncatedSeries::shifted_down: low coefficients are not zero");
        TruncatedSeries r(order() - k);
        for (int j = k; j <= order(); ++j) r[j - k] = coeffs_[static_cast<std::size_t>(j)];
        return r;
    }

    /// s(z^n), truncated at the same order.
    TruncatedSeries substitute_power(int n) const {
        if (n < 1) throw std::invalid_argument("substitute_power: n must be >= 1");
        TruncatedSeries r(order());
        for (int j = 0; j * n <= order(); ++j) r[j * n] = coeffs_[static_cast<std::size_t>(j)];
        return r;
    }

    /// Horner evaluation of the truncated polynomial.
    template <class Z>
    Z evaluate(const Z& z) const {
        Z acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + Z(to_value(*it));
        return acc;
    }

private:
    static std::size_t check_order(int order) {
        if (order < 0) throw std::invalid_argument("TruncatedSeries: negative order");
        return static_cast<std::size_t>(order);
    }
    void same_order(const TruncatedSeries& o) const {
        if (o.order() != order()) throw std::invalid_argument("TruncatedSeries: order mismatch");
    }
    static auto to_value(const T& c) {
        if constexpr (std::is_same_v<T, Rational>) return to_double(c);
        else return c;
    }

    std::vector<T> coeffs_;
};

using RationalSeries = TruncatedSeries<Rational>;
using ComplexSeries = TruncatedSeries<std::complex<double>>;

/// Square root with t_0 = 1; requires a_0 = 1.
template <class T>
TruncatedSeries<T> series_sqrt(const TruncatedSeries<T>& s) {
    if (s[0] != lift<T>(1)) throw std::domain_error("series_sqrt: constant term must be 1");
    TruncatedSeries<T> t(s.order());
    t[0] = lift<T>(1);
    for (int k = 1; k <= s.order(); ++k) {
        T acc = s[k];
        for (int j = 1; j < k; ++j) acc -= t[j] * t[k - j];
        t[k] = acc / lift<T>(2);
    }
    return t;
}

/// exp(s) for s with a_0 = 0, via k e_k = sum_{j=1..k} j s_j e_{k-j}.
template <class T>
TruncatedSeries<T> series_exp(const TruncatedSeries<T>& s) {
    if (s[0] != lift<T>(0)) throw std::domain_error("series_exp: constant term must be 0");
    TruncatedSeries<T> e(s.order());
    e[0] = lift<T>(1);
    for (int k = 1; k <= s.order(); ++k) {
        T acc = lift<T>(0);
        for (int j = 1; j <= k; ++j) acc += lift<T>(j) * s[j] * e[k - j];
        e[k] = acc / lift<T>(k);
    }
    return e;
}

/// log(s) for s with a_0 = 1, via k l_k = k s_k - sum_{j=1..k-1} j l_j s_{k-j}.
template <class T>
TruncatedSeries<T> series_log(const TruncatedSeries<T>& s) {
    if (s[0] != lift<T>(1)) throw std::domain_error("series_log: constant term must be 1");
    TruncatedSeries<T> l(s.order());
    for (int k = 1; k <= s.order(); ++k) {
        T acc = lift<T>(k) * s[k];
        for (int j = 1; j < k; ++j) acc -= lift<T>(j) * l[j] * s[k - j];
        l[k] = acc / lift<T>(k);
    }
    return l;
}

/// 1/s for a_0 != 0.
template <class T>
TruncatedSeries<T> series_reciprocal(const TruncatedSeries<T>& s) {
    if (s[0] == lift<T>(0)) throw std::domain_error("series_reciprocal: constant term is zero");
    TruncatedSeries<T> r(s.order());
    r[0] = lift<T>(1) / s[0];
    for (int k = 1; k <= s.order(); ++k) {
        T acc = lift<T>(0);
        for (int j = 1; j <= k; ++j) acc += s[j] * r[k - j];
        r[k] = -acc / s[0];
    }
    return r;
}

/// integral_0^z s(t)/t dt = sum_{k>=1} (a_k / k) z^k; requires a_0 = 0.
template <class T>
TruncatedSeries<T> integrate_div_t(const TruncatedSeries<T>& s) {
    if (s[0] != lift<T>(0)) throw std::domain_error("integrate_div_t: constant term must be 0");
    TruncatedSeries<T> r(s.order());
    for (int k = 1; k <= s.order(); ++k) r[k] = s[k] / lift<T>(k);
    return r;
}

enum class ElementaryOp { exp, log, integrate_div_t, reciprocal };

template <class T>
TruncatedSeries<T> series_compose_elementary(const TruncatedSeries<T>& s, ElementaryOp kind) {
    switch (kind) {
        case ElementaryOp::exp: return series_exp(s);
        case ElementaryOp::log: return series_log(s);
        case ElementaryOp::integrate_div_t: return integrate_div_t(s);
        case ElementaryOp::reciprocal: return series_reciprocal(s);
    }
    throw std::invalid_argument("series_compose_elementary: unknown op");
}

/// z * exp(integral_0^z (sqrt(1 + t^n) - 1)/t dt), the function whose
/// z f'/f equals sqrt(1 + z^n). Coefficients a_0..a_N.
inline RationalSeries extremal_sl(int n, int order) {
    if (n < 1) throw std::invalid_argument("extremal_sl: n must be >= 1");
    if (order < n + 1) throw std::invalid_argument("extremal_sl: order must be at least n + 1");
    int inner = order - 1;  // g = f/z needs coefficients up to N - 1
    RationalSeries base = RationalSeries::constant(inner, 1) + RationalSeries::monomial(inner, n);
    RationalSeries root = series_sqrt(base);
    root[0] = 0;
    RationalSeries g = series_exp(integrate_div_t(root));
    RationalSeries f(order);
    for (int k = 0; k <= inner; ++k) f[k + 1] = g[k];
    return f;
}

/// w = z f'(z) / f(z) for normalized f (a_0 = 0, a_1 = 1). Result has order N - 1 and w_0 = 1.
template <class T>
TruncatedSeries<T> logarithmic_derivative_ratio(const TruncatedSeries<T>& f) {
    if (f.order() < 2) throw std::invalid_argument("logarithmic_derivative_ratio: order must be >= 2");
    if (f[0] != lift<T>(0) || f[1] != lift<T>(1))
        throw std::domain_error("logarithmic_derivative_ratio: f must satisfy a_0 = 0, a_1 = 1");
    // f = z g with g_0 = 1, so w = (z f')/f = f'/g.
    TruncatedSeries<T> g = f.shifted_down(1);
    TruncatedSeries<T> fp = f.derivative();
    return fp * series_reciprocal(g);
}

}  // namespace slh
