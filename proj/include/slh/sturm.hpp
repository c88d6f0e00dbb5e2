#pragma once

#include "slh/ratpoly.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace slh {

/// Dense univariate polynomial c[0] + c[1] t + ... with exact coefficients; no trailing zeros.
using UPoly = std::vector<Rational>;

namespace upoly {

inline void normalize(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

inline Rational eval(const UPoly& a, const Rational& t) {
    Rational acc = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * t + *it;
    return acc;
}

inline int sign(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

inline UPoly derivative(const UPoly& a) {
    UPoly d;
    for (std::size_t k = 1; k < a.size(); ++k) d.push_back(a[k] * static_cast<long>(k));
    normalize(d);
    return d;
}

/// Quotient and remainder of a / b (b nonzero).
inline std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
    if (b.empty()) throw std::domain_error("upoly::divmod: division by zero polynomial");
    normalize(a);
    if (a.size() < b.size()) return {UPoly{}, a};
    UPoly q(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        Rational f = a.back() / lead;
        q[shift] = f;
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
        a.pop_back();
        normalize(a);
    }
    normalize(q);
    return {q, a};
}

inline UPoly monic(UPoly a) {
    normalize(a);
    if (a.empty()) return a;
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
    return a;
}

inline UPoly gcd(UPoly a, UPoly b) {
    normalize(a);
    normalize(b);
    while (!b.empty()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

/// f / gcd(f, f'): same real roots, all simple.
inline UPoly square_free(const UPoly& f) {
    UPoly d = derivative(f);
    if (d.empty()) return monic(f);
    return monic(divmod(f, gcd(f, d)).first);
}

}  // namespace upoly

/// Dense coefficients of a polynomial in at most one variable.
inline UPoly to_upoly(const RatPoly& f) {
    UPoly c = f.univariate_coefficients();
    upoly::normalize(c);
    return c;
}

/// Sturm chain f_0 = f, f_1 = f', f_{k+1} = -rem(f_{k-1}, f_k).
class SturmSequence {
public:
    explicit SturmSequence(const UPoly& f) {
        UPoly a = f;
        upoly::normalize(a);
        if (a.empty()) throw std::domain_error("SturmSequence: zero polynomial");
        chain_.push_back(a);
        UPoly b = upoly::derivative(a);
        while (!b.empty()) {
            chain_.push_back(b);
            UPoly r = upoly::divmod(chain_[chain_.size() - 2], b).second;
            for (auto& c : r) c = -c;
            b = std::move(r);
        }
    }

    /// Sign changes of the chain at t, zeros skipped.
    int variations(const Rational& t) const {
        int changes = 0, last = 0;
        for (const auto& p : chain_) {
            int s = upoly::sign(upoly::eval(p, t));
            if (s == 0) continue;
            if (last != 0 && s != last) ++changes;
            last = s;
        }
        return changes;
    }

    /// Distinct roots in (a, b] for a < b; f must be square-free.
    int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }

    const std::vector<UPoly>& chain() const { return chain_; }

private:
    std::vector<UPoly> chain_;
};

enum class Endpoints { open, closed };

struct IsolatedRoot {
    RatInterval interval;
    /// The root is exactly interval.lo (== interval.hi).
    bool exact = false;
    /// Sign of the square-free part at the interval ends (0 at an exact root).
    int sign_lo = 0;
    int sign_hi = 0;
};

struct RootIsolation {
    std::vector<IsolatedRoot> roots;
    RatInterval query;
    Endpoints endpoints = Endpoints::open;

    std::size_t count() const { return roots.size(); }
};

/// Isolates the distinct real roots of a univariate `f` in the query interval and
/// refines each isolating interval to width <= refine_to.
inline RootIsolation isolate_roots(const RatPoly& f, const RatInterval& query, const Rational& refine_to,
                                   Endpoints endpoints = Endpoints::open) {
    if (refine_to <= 0) throw std::invalid_argument("isolate_roots: refine_to must be positive");
    UPoly full = to_upoly(f);
    if (full.empty()) throw std::domain_error("isolate_roots: zero polynomial");
    UPoly g = upoly::square_free(full);
    SturmSequence sturm(g);
    RootIsolation out;
    out.query = query;
    out.endpoints = endpoints;
    auto sgn = [&](const Rational& t) { return upoly::sign(upoly::eval(g, t)); };
    auto push_exact = [&](const Rational& t) { out.roots.push_back({RatInterval::point(t), true, 0, 0}); };

    if (upoly::degree(g) < 1) return out;
    if (query.lo == query.hi) {
        if (endpoints == Endpoints::closed && sgn(query.lo) == 0) push_exact(query.lo);
        return out;
    }

    // Roots strictly inside (a, b); an exact root at b is excluded from the count.
    auto inside = [&](const Rational& a, const Rational& b) { return sturm.count(a, b) - (sgn(b) == 0 ? 1 : 0); };

    auto refine = [&](Rational a, Rational b) {
        while (b - a > refine_to) {
            Rational m = (a + b) / 2;
            if (sgn(m) == 0) {
                push_exact(m);
                return;
            }
            if (inside(a, m) == 1) b = m;
            else a = m;
        }
        out.roots.push_back({RatInterval(a, b), false, sgn(a), sgn(b)});
    };

    if (endpoints == Endpoints::closed && sgn(query.lo) == 0) push_exact(query.lo);
    std::vector<std::pair<Rational, Rational>> work{{query.lo, query.hi}};
    std::vector<std::pair<Rational, Rational>> singles;
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        int n = inside(a, b);
        if (n == 0) continue;
        if (n == 1) {
            singles.emplace_back(a, b);
            continue;
        }
        Rational m = (a + b) / 2;
        if (sgn(m) == 0) push_exact(m);
        work.emplace_back(m, b);
        work.emplace_back(a, m);
    }
    for (auto& [a, b] : singles) refine(a, b);
    if (endpoints == Endpoints::closed && sgn(query.hi) == 0) push_exact(query.hi);

    std::sort(out.roots.begin(), out.roots.end(),
              [](const IsolatedRoot& x, const IsolatedRoot& y) { return x.interval.lo < y.interval.lo; });
    return out;
}

}  // namespace slh
