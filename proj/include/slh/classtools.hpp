#pragma once

#include "slh/series.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace slh {

/// Concentric circles radius * j / rings (j = 1..rings), `angles` points each, plus z = 0.
struct GridSpec {
    double radius = 0.99;
    int angles = 720;
    int rings = 8;

    std::vector<std::complex<double>> points() const {
        std::vector<std::complex<double>> z{0.0};
        for (int j = 1; j <= rings; ++j) {
            double r = radius * j / rings;
            for (int k = 0; k < angles; ++k) z.push_back(std::polar(r, 2 * M_PI * k / angles));
        }
        return z;
    }
};

inline void validate_grid(const GridSpec& g) {
    if (!(g.radius > 0 && g.radius < 1)) throw std::invalid_argument("grid radius must lie in (0, 1)");
    if (g.angles < 1 || g.rings < 1) throw std::invalid_argument("grid needs at least one ring and one angle");
}

/// Grid evidence (not a certificate) for |(z f'/f)^2 - 1| < 1.
struct MembershipVerdict {
    bool passes = false;
    std::complex<double> worst_point;
    /// max |w^2 - 1| over the grid.
    double worst_value = 0;
    GridSpec grid;
    /// Geometric majorant of the truncation tail at the grid radius (0 for closed forms).
    double tail_bound = 0;
};

namespace detail {

template <class T>
std::vector<std::complex<double>> complex_coefficients(const TruncatedSeries<T>& f) {
    std::vector<std::complex<double>> c;
    c.reserve(f.coefficients().size());
    for (const auto& a : f.coefficients()) {
        if constexpr (std::is_same_v<T, Rational>) c.emplace_back(to_double(a));
        else c.emplace_back(a);
    }
    return c;
}

inline std::complex<double> horner(const std::vector<std::complex<double>>& c, std::size_t from,
                                   std::complex<double> z) {
    std::complex<double> acc = 0;
    for (std::size_t k = c.size(); k-- > from;) acc = acc * z + c[k];
    return acc;
}

/// max(|a_{N-2}|, |a_{N-1}|, |a_N|) r^{N+1} / (1 - r).
inline double tail_majorant(const std::vector<std::complex<double>>& c, double r) {
    double m = 0;
    std::size_t n = c.size() - 1;
    for (std::size_t k = n >= 2 ? n - 2 : 0; k <= n; ++k) m = std::max(m, std::abs(c[k]));
    return m * std::pow(r, static_cast<double>(n + 1)) / (1 - r);
}

/// w = z f'(z) / f(z) = f'(z) / (f(z)/z).
inline std::complex<double> log_derivative_ratio_at(const std::vector<std::complex<double>>& c,
                                                    std::complex<double> z) {
    std::complex<double> fp = 0, g = 0;
    for (std::size_t k = c.size(); k-- > 1;) {
        fp = fp * z + static_cast<double>(k) * c[k];
        g = g * z + c[k];
    }
    return fp / g;
}

}  // namespace detail

/// Grid check of SL* membership for a normalized truncated series.
/// Throws std::domain_error when the truncation tail bound at the radius exceeds `tail_tol`.
template <class T>
MembershipVerdict sl_membership_grid(const TruncatedSeries<T>& f, const GridSpec& grid, double tail_tol = 1e-6) {
    validate_grid(grid);
    if (f.order() < 2) throw std::invalid_argument("sl_membership_grid: order must be >= 2");
    if (f[0] != lift<T>(0) || f[1] != lift<T>(1))
        throw std::domain_error("sl_membership_grid: f must satisfy a_0 = 0, a_1 = 1");
    auto c = detail::complex_coefficients(f);
    MembershipVerdict v;
    v.grid = grid;
    v.tail_bound = detail::tail_majorant(c, grid.radius);
    if (v.tail_bound > tail_tol)
        throw std::domain_error("sl_membership_grid: truncation tail bound " + std::to_string(v.tail_bound) +
                                " exceeds tolerance at the requested radius");
    for (auto z : grid.points()) {
        auto w = detail::log_derivative_ratio_at(c, z);
        double val = std::abs(w * w - 1.0);
        if (val > v.worst_value) {
            v.worst_value = val;
            v.worst_point = z;
        }
    }
    v.passes = v.worst_value < 1;
    return v;
}

/// Grid check of |(1/(1 - alpha z))^2 - 1| < 1, i.e. membership of z/(1 - alpha z).
inline MembershipVerdict theta_membership(double alpha, const GridSpec& grid = {0.999, 720, 8}) {
    if (!(std::abs(alpha) < 1)) throw std::domain_error("theta_membership: |alpha| must be < 1");
    validate_grid(grid);
    MembershipVerdict v;
    v.grid = grid;
    for (auto z : grid.points()) {
        auto w = 1.0 / (1.0 - alpha * z);
        double val = std::abs(w * w - 1.0);
        if (val > v.worst_value) {
            v.worst_value = val;
            v.worst_point = z;
        }
    }
    v.passes = v.worst_value < 1;
    return v;
}

/// Bisection for the smallest alpha >= 0 at which theta_membership fails on the grid.
inline double theta_empirical_threshold(const GridSpec& grid = {0.999, 720, 8}, double tol = 1e-10) {
    double lo = 0, hi = 0.5;
    if (!theta_membership(hi, grid).passes) {
        while (hi - lo > tol) {
            double mid = (lo + hi) / 2;
            (theta_membership(mid, grid).passes ? lo : hi) = mid;
        }
    }
    return hi;
}

struct LemniscatePoint {
    double t = 0;
    int sign = 1;
    std::complex<double> value;
    /// (u^2 + v^2)^2 - 2(u^2 - v^2) at value = u + iv.
    double residual = 0;
};

inline double lemniscate_residual(std::complex<double> w) {
    double u2 = w.real() * w.real(), v2 = w.imag() * w.imag();
    return (u2 + v2) * (u2 + v2) - 2 * (u2 - v2);
}

/// S(t) = sqrt(t) + i sign sqrt(sqrt(1 + 4t) - (t + 1)), 0 < t < 2.
inline LemniscatePoint lemniscate_param(double t, int sign) {
    if (!(t > 0 && t < 2)) throw std::domain_error("lemniscate_param: t must lie in (0, 2)");
    if (sign != 1 && sign != -1) throw std::invalid_argument("lemniscate_param: sign must be +1 or -1");
    double inner = std::max(0.0, std::sqrt(1 + 4 * t) - (t + 1));
    LemniscatePoint pt;
    pt.t = t;
    pt.sign = sign;
    pt.value = {std::sqrt(t), sign * std::sqrt(inner)};
    pt.residual = lemniscate_residual(pt.value);
    return pt;
}

/// H_t(z) = sum_{n>=1} (n - S)/(1 - S) z^n.
inline ComplexSeries convolution_kernel(std::complex<double> S, int order) {
    if (order < 2) throw std::invalid_argument("convolution_kernel: order must be >= 2");
    if (S == 1.0) throw std::domain_error("convolution_kernel: S must differ from 1");
    ComplexSeries h(order);
    for (int n = 1; n <= order; ++n) h[n] = (static_cast<double>(n) - S) / (1.0 - S);
    return h;
}

inline ComplexSeries convolution_kernel(double t, int sign, int order) {
    return convolution_kernel(lemniscate_param(t, sign).value, order);
}

/// z / ((1 - z)(1 - S)) * (1/(1 - z) - S) by series arithmetic.
inline ComplexSeries convolution_kernel_by_division(std::complex<double> S, int order) {
    if (order < 2) throw std::invalid_argument("convolution_kernel_by_division: order must be >= 2");
    ComplexSeries one_minus_z = ComplexSeries::constant(order, 1.0) - ComplexSeries::monomial(order, 1);
    ComplexSeries inv = series_reciprocal(one_minus_z);
    ComplexSeries bracket = inv - ComplexSeries::constant(order, S);
    ComplexSeries z = ComplexSeries::monomial(order, 1, 1.0 / (1.0 - S));
    return z * inv * bracket;
}

/// (f * H)(z) / z for the kernel with parameter S.
template <class T>
std::complex<double> convolution_quotient(const TruncatedSeries<T>& f, std::complex<double> S, std::complex<double> z) {
    auto c = detail::complex_coefficients(f);
    ComplexSeries h = convolution_kernel(S, std::max(f.order(), 2));
    for (std::size_t n = 0; n < c.size(); ++n) c[n] *= h[static_cast<int>(n)];
    return detail::horner(c, 1, z);
}

struct ParameterGrid {
    std::vector<double> t;
    bool both_signs = true;

    /// t = 0.1, 0.2, ..., 1.9 (endpoints of (0, 2) excluded).
    static ParameterGrid standard(int steps = 20) {
        ParameterGrid g;
        for (int k = 1; k < steps; ++k) g.t.push_back(2.0 * k / steps);
        return g;
    }
};

struct ConvolutionVerdict {
    double min_modulus = INFINITY;
    bool passes = false;
    double threshold = 1e-3;
    double worst_t = 0;
    int worst_sign = 1;
    std::complex<double> worst_z;
    GridSpec grid;
    std::size_t evaluations = 0;
};

struct ConvolutionOptions {
    double threshold = 1e-3;
    /// Require f to pass sl_membership_grid on the z-grid (tail tolerance = threshold).
    bool check_membership = true;
};

/// min |(f * H_t)(z) / z| over the t-grid and z-grid; passes iff min > threshold.
template <class T>
ConvolutionVerdict convolution_nonvanishing(const TruncatedSeries<T>& f, const ParameterGrid& tg,
                                            const GridSpec& zg = {0.95, 180, 8},
                                            const ConvolutionOptions& opts = {}) {
    validate_grid(zg);
    if (tg.t.empty()) throw std::invalid_argument("convolution_nonvanishing: empty t-grid");
    if (opts.check_membership && !sl_membership_grid(f, zg, opts.threshold).passes)
        throw std::domain_error("convolution_nonvanishing: f fails the membership grid check");
    auto c = detail::complex_coefficients(f);
    const int order = f.order();
    const auto zs = zg.points();
    ConvolutionVerdict v;
    v.threshold = opts.threshold;
    v.grid = zg;
    std::vector<int> signs{1};
    if (tg.both_signs) signs.push_back(-1);
    for (double t : tg.t) {
        for (int s : signs) {
            ComplexSeries h = convolution_kernel(t, s, std::max(order, 2));
            std::vector<std::complex<double>> prod(c.size());
            for (std::size_t n = 0; n < c.size(); ++n) prod[n] = c[n] * h[static_cast<int>(n)];
            for (auto z : zs) {
                double m = std::abs(detail::horner(prod, 1, z));
                ++v.evaluations;
                if (m < v.min_modulus) {
                    v.min_modulus = m;
                    v.worst_t = t;
                    v.worst_sign = s;
                    v.worst_z = z;
                }
            }
        }
    }
    v.passes = v.min_modulus > opts.threshold;
    return v;
}

}  // namespace slh
