#pragma once

#include "slh/bernstein.hpp"
#include "slh/ratpoly.hpp"
#include "slh/sturm.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace slh {

struct CertifiedMax {
    /// [best witness value, global upper bound]; contains the true maximum.
    RatInterval enclosure;
    std::vector<Rational> witness;
    Rational witness_value;
    std::uint64_t subdivisions = 0;
    /// False when the subdivision budget ran out before the tolerance was met.
    bool converged = false;
};

struct CertifyOptions {
    Rational tol = Rational(1, 1000000);
    std::uint64_t max_boxes = 1000000;
};

namespace detail {

struct QueuedPatch {
    BernsteinPatch patch;
    Rational upper;
    Rational volume;
};

inline Rational box_volume(const BoxRegion& b) {
    Rational v = 1;
    for (const auto& s : b.sides) v *= s.width();
    return v;
}

/// Heap order: larger upper bound first, then larger volume, then lexicographically smaller lower corner.
inline bool queue_before(const QueuedPatch& a, const QueuedPatch& b) {
    if (a.upper != b.upper) return a.upper > b.upper;
    if (a.volume != b.volume) return a.volume > b.volume;
    const auto& sa = a.patch.box().sides;
    const auto& sb = b.patch.box().sides;
    for (std::size_t i = 0; i < sa.size(); ++i)
        if (sa[i].lo != sb[i].lo) return sa[i].lo < sb[i].lo;
    return false;
}

}  // namespace detail

/// Certified maximum of `f` over `box` by best-first Bernstein branch-and-bound.
///
/// Boxes whose Bernstein upper bound does not exceed the best vertex value are
/// discarded; the search stops once the largest remaining upper bound is within
/// `tol` of the best vertex value. The witness is always a box vertex.
inline CertifiedMax certify_max(const RatPoly& f, const BoxRegion& box, const CertifyOptions& opts = {}) {
    if (opts.tol <= 0) throw std::invalid_argument("certify_max: tol must be positive");
    auto heap_less = [](const detail::QueuedPatch& a, const detail::QueuedPatch& b) {
        return detail::queue_before(b, a);
    };

    CertifiedMax out;
    BernsteinPatch root = BernsteinPatch::build(f, box);
    auto [best, best_at] = root.best_vertex();

    std::vector<detail::QueuedPatch> heap;
    heap.push_back({root, root.upper(), detail::box_volume(box)});

    while (true) {
        while (!heap.empty() && heap.front().upper <= best) {
            std::pop_heap(heap.begin(), heap.end(), heap_less);
            heap.pop_back();
        }
        if (heap.empty()) {
            out.enclosure = RatInterval::point(best);
            out.converged = true;
            break;
        }
        const Rational top = heap.front().upper;
        if (top - best <= opts.tol) {
            out.enclosure = {best, top};
            out.converged = true;
            break;
        }
        if (out.subdivisions >= opts.max_boxes) {
            out.enclosure = {best, top};
            out.converged = false;
            break;
        }
        std::pop_heap(heap.begin(), heap.end(), heap_less);
        detail::QueuedPatch cur = std::move(heap.back());
        heap.pop_back();

        const auto& sides = cur.patch.box().sides;
        const auto& deg = cur.patch.degrees();
        std::size_t axis = sides.size();
        for (std::size_t i = 0; i < sides.size(); ++i) {
            if (deg[i] == 0) continue;
            if (axis == sides.size() || sides[i].width() > sides[axis].width()) axis = i;
        }
        if (axis == sides.size()) continue;  // constant patch: its value is a vertex value, already <= best

        auto [left, right] = cur.patch.split(axis);
        ++out.subdivisions;
        for (auto* child : {&left, &right}) {
            auto [v, at] = child->best_vertex();
            if (v > best) {
                best = v;
                best_at = std::move(at);
            }
            Rational up = child->upper();
            if (up <= best) continue;
            Rational vol = cur.volume / 2;
            heap.push_back({std::move(*child), std::move(up), std::move(vol)});
            std::push_heap(heap.begin(), heap.end(), heap_less);
        }
    }
    out.witness = std::move(best_at);
    out.witness_value = best;
    return out;
}

/// f with `var` fixed to `value`; the variable is removed.
inline RatPoly face_restrict(const RatPoly& f, const std::string& var, const Rational& value) {
    return f.substitute(var, value);
}

/// Restriction to the face `var = value` of `box`, checked against the box side.
inline RatPoly face_restrict(const RatPoly& f, const BoxRegion& box, const std::string& var, const Rational& value) {
    if (!box.side(var).contains(value))
        throw std::invalid_argument("face_restrict: value outside the box range of '" + var + "'");
    return face_restrict(f, var, value);
}

/// The box with the named variables removed.
inline BoxRegion drop_sides(const BoxRegion& box, const std::vector<std::string>& fixed) {
    BoxRegion out;
    for (std::size_t i = 0; i < box.dim(); ++i) {
        if (std::find(fixed.begin(), fixed.end(), box.vars[i]) != fixed.end()) continue;
        out.vars.push_back(box.vars[i]);
        out.sides.push_back(box.sides[i]);
    }
    return out;
}

}  // namespace slh
