#pragma once

#include "slh/ratpoly.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace slh {

/// Tensor-product Bernstein coefficients of a polynomial on a box.
///
/// Degrees are the per-variable degrees of the source polynomial; they are
/// never raised. The coefficient hull encloses the range over the box and the
/// corner coefficients are the exact vertex values.
class BernsteinPatch {
public:
    BernsteinPatch() = default;

    /// Builds the patch of `f` over `box`; variables are matched by name and
    /// variables of `box` absent from `f` get degree 0.
    static BernsteinPatch build(const RatPoly& f, const BoxRegion& box) {
        for (const auto& s : box.sides)
            if (s.lo > s.hi) throw std::invalid_argument("BernsteinPatch: empty box side");
        RatPoly g = f.with_vars(RatPoly::union_vars(box.vars, f.vars()));
        if (g.vars().size() != box.vars.size())
            throw std::invalid_argument("BernsteinPatch: box does not cover every polynomial variable");
        g = g.with_vars(box.vars);

        // Affine change of variables onto the unit box: v = lo + (hi - lo) * t.
        std::map<std::string, RatPoly> affine;
        for (std::size_t i = 0; i < box.dim(); ++i) {
            const auto& s = box.sides[i];
            affine[box.vars[i]] = RatPoly(s.lo) + RatPoly(s.width()) * RatPoly::variable(box.vars[i]);
        }
        RatPoly unit = compose(g, affine).with_vars(box.vars);

        BernsteinPatch b;
        b.box_ = box;
        b.degrees_.resize(box.dim());
        for (std::size_t i = 0; i < box.dim(); ++i) b.degrees_[i] = unit.degree(box.vars[i]);
        b.init_strides();
        b.coeffs_.assign(b.total_size(), Rational(0));
        for (const auto& [m, c] : unit.terms()) b.coeffs_[b.offset(m)] = c;

        // Power basis to Bernstein basis, one axis at a time:
        // b_k = sum_{j<=k} C(k,j)/C(d,j) a_j.
        for (std::size_t axis = 0; axis < box.dim(); ++axis) {
            int d = b.degrees_[axis];
            if (d == 0) continue;
            std::vector<std::vector<Rational>> weight(static_cast<std::size_t>(d) + 1);
            for (int k = 0; k <= d; ++k) {
                weight[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>(k) + 1);
                for (int j = 0; j <= k; ++j) {
                    Rational w(binomial(k, j), binomial(d, j));
                    w.canonicalize();
                    weight[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = w;
                }
            }
            b.for_each_fiber(axis, [&](std::vector<Rational*>& fiber) {
                std::vector<Rational> a(fiber.size());
                for (std::size_t j = 0; j < fiber.size(); ++j) a[j] = *fiber[j];
                for (std::size_t k = 0; k < fiber.size(); ++k) {
                    Rational s = 0;
                    for (std::size_t j = 0; j <= k; ++j) s += weight[k][j] * a[j];
                    *fiber[k] = s;
                }
            });
        }
        return b;
    }

    const BoxRegion& box() const { return box_; }
    const std::vector<int>& degrees() const { return degrees_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational upper() const { return *std::max_element(coeffs_.begin(), coeffs_.end()); }
    Rational lower() const { return *std::min_element(coeffs_.begin(), coeffs_.end()); }
    RatInterval enclosure() const { return {lower(), upper()}; }

    /// Best vertex of the box: (value, coordinates). Ties resolve to the first vertex in index order.
    std::pair<Rational, std::vector<Rational>> best_vertex() const {
        std::size_t n = degrees_.size();
        std::pair<Rational, std::vector<Rational>> best;
        bool have = false;
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            Monomial idx(n);
            std::vector<Rational> at(n);
            bool skip = false;
            for (std::size_t i = 0; i < n; ++i) {
                bool high = (mask >> i) & 1U;
                if (high && degrees_[i] == 0) {
                    skip = true;  // same coefficient as the low vertex
                    break;
                }
                idx[i] = high ? degrees_[i] : 0;
                at[i] = high ? box_.sides[i].hi : box_.sides[i].lo;
            }
            if (skip) continue;
            const Rational& v = coeffs_[offset(idx)];
            if (!have || v > best.first) {
                best = {v, std::move(at)};
                have = true;
            }
        }
        return best;
    }

    /// Exact de Casteljau split of one axis at its midpoint.
    std::pair<BernsteinPatch, BernsteinPatch> split(std::size_t axis) const {
        BernsteinPatch left = *this, right = *this;
        Rational mid = box_.sides[axis].midpoint();
        left.box_.sides[axis] = {box_.sides[axis].lo, mid};
        right.box_.sides[axis] = {mid, box_.sides[axis].hi};
        int d = degrees_[axis];
        if (d == 0) return {left, right};
        auto d1 = static_cast<std::size_t>(d) + 1;
        std::vector<std::vector<Rational*>> lfibers, rfibers;
        left.for_each_fiber(axis, [&](std::vector<Rational*>& f) { lfibers.push_back(f); });
        right.for_each_fiber(axis, [&](std::vector<Rational*>& f) { rfibers.push_back(f); });
        std::vector<Rational> work(d1);
        for (std::size_t fi = 0; fi < lfibers.size(); ++fi) {
            auto& L = lfibers[fi];
            auto& R = rfibers[fi];
            for (std::size_t j = 0; j < d1; ++j) work[j] = *L[j];
            *L[0] = work[0];
            *R[d1 - 1] = work[d1 - 1];
            for (std::size_t r = 1; r < d1; ++r) {
                for (std::size_t j = 0; j + r < d1; ++j) {
                    work[j] += work[j + 1];
                    work[j] /= 2;
                }
                *L[r] = work[0];
                *R[d1 - 1 - r] = work[d1 - 1 - r];
            }
        }
        return {left, right};
    }

private:
    static mpz_class binomial(int n, int k) {
        mpz_class r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return r;
    }

    void init_strides() {
        strides_.assign(degrees_.size(), 1);
        for (std::size_t i = degrees_.size(); i-- > 1;)
            strides_[i - 1] = strides_[i] * (static_cast<std::size_t>(degrees_[i]) + 1);
    }
    std::size_t total_size() const {
        std::size_t s = 1;
        for (int d : degrees_) s *= static_cast<std::size_t>(d) + 1;
        return s;
    }
    std::size_t offset(const Monomial& m) const {
        std::size_t o = 0;
        for (std::size_t i = 0; i < m.size(); ++i) o += static_cast<std::size_t>(m[i]) * strides_[i];
        return o;
    }

    template <class Fn>
    void for_each_fiber(std::size_t axis, Fn&& fn) {
        std::size_t len = static_cast<std::size_t>(degrees_[axis]) + 1;
        std::size_t stride = strides_[axis];
        std::size_t total = total_size();
        std::vector<Rational*> fiber(len);
        for (std::size_t base = 0; base < total; ++base) {
            if ((base / stride) % len != 0) continue;
            for (std::size_t j = 0; j < len; ++j) fiber[j] = &coeffs_[base + j * stride];
            fn(fiber);
        }
    }

    BoxRegion box_;
    std::vector<int> degrees_;
    std::vector<std::size_t> strides_;
    std::vector<Rational> coeffs_;
};

/// Range enclosure of `f` over `box` from the min/max Bernstein coefficients.
inline RatInterval bernstein_enclosure(const RatPoly& f, const BoxRegion& box) {
    return BernsteinPatch::build(f, box).enclosure();
}

}  // namespace slh
