#pragma once

#include "slh/caratheodory.hpp"
#include "slh/functionals.hpp"

#include <gmp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace slh {

/// Sharp bound for the functionals with a known extremal value.
inline std::optional<Rational> known_bound(const FunctionalId& id) {
    switch (id.tag) {
        case FunctionalTag::H3_1:
        case FunctionalTag::H2_3: return Rational(1, 36);
        case FunctionalTag::ZALCMAN_3: return Rational(1, 8);
        default: return std::nullopt;
    }
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
inline std::optional<Rational> exact_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

/// Deterministic witnesses: p_3 = 2, p_4 = 2, p_1 = 2 and p_2 = 2 respectively.
inline std::vector<ParamPoint> oracle_witnesses() {
    ExactComplex one(1), zero;
    return {make_param_point(0, zero, one, zero), make_param_point(0, zero, zero, one),
            make_param_point(2, zero, zero, zero), make_param_point(0, one, zero, zero)};
}

struct SampleOptions {
    /// Put each disk parameter on the unit circle with probability 1/2.
    bool boundary = false;
    unsigned jobs = 1;
    /// Samples per seeded chunk; chunk k draws from the stream of (seed, k), so results do not depend on `jobs`.
    std::uint64_t chunk = 1u << 16;
};

struct SampleReport {
    FunctionalId functional;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    bool boundary = false;
    /// Max of |functional| over samples and witnesses.
    double empirical_max = 0;
    NumericParamPoint argmax{};
    bool argmax_is_witness = false;

    /// Bulk (double precision) part.
    double sample_max = 0;
    NumericParamPoint sample_argmax{};

    /// Exact witness part: |value|^2 and, when rational, |value|.
    Rational witness_norm;
    std::optional<Rational> witness_max;
    ParamPoint witness_argmax{};

    std::optional<Rational> bound;
    /// Samples above bound + 1e-12.
    std::uint64_t exceedances = 0;
};

namespace detail {

inline double unit_uniform(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

inline std::complex<double> disk_sample(std::mt19937_64& g, bool boundary) {
    if (boundary && unit_uniform(g) < 0.5) {
        double th = 2 * M_PI * unit_uniform(g);
        return {std::cos(th), std::sin(th)};
    }
    while (true) {
        double u = 2 * unit_uniform(g) - 1, v = 2 * unit_uniform(g) - 1;
        if (u * u + v * v <= 1) return {u, v};
    }
}

struct ChunkResult {
    double max = -1;
    NumericParamPoint at{};
    std::uint64_t exceed = 0;
};

inline std::mt19937_64 chunk_engine(std::uint64_t seed, std::uint64_t chunk) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
    return std::mt19937_64(seq);
}

inline ChunkResult run_chunk(const FunctionalId& id, std::uint64_t seed, std::uint64_t chunk, std::uint64_t count,
                             bool boundary, double cap) {
    std::mt19937_64 g = chunk_engine(seed, chunk);
    ChunkResult r;
    for (std::uint64_t i = 0; i < count; ++i) {
        NumericParamPoint pt;
        pt.p = 2 * unit_uniform(g);
        pt.gamma = disk_sample(g, boundary);
        pt.eta = disk_sample(g, boundary);
        pt.rho = disk_sample(g, boundary);
        double v = std::abs(functional_at(id, pt));
        if (v > cap) ++r.exceed;
        if (v > r.max) {
            r.max = v;
            r.at = pt;
        }
    }
    return r;
}

}  // namespace detail

/// Randomized lower bound for sup |functional| over the parameter space.
inline SampleReport sample_sup(const FunctionalId& id, std::uint64_t n, std::uint64_t seed,
                               const SampleOptions& opts = {}) {
    if (n < 1) throw std::invalid_argument("sample_sup: n must be >= 1");
    if (opts.chunk < 1) throw std::invalid_argument("sample_sup: chunk must be >= 1");
    SampleReport rep;
    rep.functional = id;
    rep.samples = n;
    rep.seed = seed;
    rep.boundary = opts.boundary;
    rep.bound = known_bound(id);
    const double cap = rep.bound ? to_double(*rep.bound) + 1e-12 : INFINITY;

    const std::uint64_t chunks = (n + opts.chunk - 1) / opts.chunk;
    std::vector<detail::ChunkResult> results(chunks);
    auto work = [&](unsigned w, unsigned stride) {
        for (std::uint64_t c = w; c < chunks; c += stride) {
            std::uint64_t count = std::min(opts.chunk, n - c * opts.chunk);
            results[c] = detail::run_chunk(id, seed, c, count, opts.boundary, cap);
        }
    };
    unsigned jobs = std::max(1u, opts.jobs);
    if (jobs == 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w, jobs);
        for (auto& t : pool) t.join();
    }
    for (const auto& r : results) {
        rep.exceedances += r.exceed;
        if (r.max > rep.sample_max) {
            rep.sample_max = r.max;
            rep.sample_argmax = r.at;
        }
    }

    bool have = false;
    for (const auto& w : oracle_witnesses()) {
        Rational nv = norm(functional_at(id, w));
        if (!have || nv > rep.witness_norm) {
            rep.witness_norm = nv;
            rep.witness_argmax = w;
            have = true;
        }
    }
    rep.witness_max = exact_sqrt(rep.witness_norm);
    double wmax = std::sqrt(to_double(rep.witness_norm));

    if (wmax >= rep.sample_max) {
        rep.empirical_max = wmax;
        rep.argmax_is_witness = true;
        const auto& w = rep.witness_argmax;
        rep.argmax = {to_double(w.p), to_double(w.gamma), to_double(w.eta), to_double(w.rho)};
    } else {
        rep.empirical_max = rep.sample_max;
        rep.argmax = rep.sample_argmax;
    }
    return rep;
}

struct MajorizationSampleReport {
    FunctionalId functional;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    /// Points where |functional| > surrogate(p, |gamma|, |eta|).
    std::uint64_t violations = 0;
    /// Termwise failures of the corrected complex-form parts.
    std::array<std::uint64_t, 4> part_violations{};
    std::optional<ParamPoint> first_violation;
};

namespace detail {

/// x * ((1 - t^2)/(1 + t^2), 2t/(1 + t^2)): modulus exactly x.
inline ExactComplex rational_on_circle(const Rational& x, const Rational& t) {
    Rational d = 1 + t * t;
    return {x * (1 - t * t) / d, x * 2 * t / d};
}

inline Rational dyadic(std::mt19937_64& g, long lo, long hi, int bits) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) << bits;
    std::uniform_int_distribution<std::uint64_t> d(0, span);
    Rational r(mpz_class(std::to_string(d(g))), mpz_class(1) << bits);
    r.canonicalize();
    return r + lo;
}

}  // namespace detail

/// Exact check of |functional| <= surrogate at seeded rational parameter points.
inline MajorizationSampleReport majorization_sample(const FunctionalId& id, std::uint64_t n, std::uint64_t seed) {
    BoundSurrogate s = bound_surrogate(id);
    MajorizationSampleReport rep;
    rep.functional = id;
    rep.samples = n;
    rep.seed = seed;
    std::mt19937_64 g(seed);
    for (std::uint64_t i = 0; i < n; ++i) {
        Rational p = detail::dyadic(g, 0, 2, 16);
        Rational x = detail::dyadic(g, 0, 1, 10), y = detail::dyadic(g, 0, 1, 10), r = detail::dyadic(g, 0, 1, 10);
        ExactComplex gamma = detail::rational_on_circle(x, detail::dyadic(g, -4, 4, 8));
        ExactComplex eta = detail::rational_on_circle(y, detail::dyadic(g, -4, 4, 8));
        ExactComplex rho = detail::rational_on_circle(r, detail::dyadic(g, -4, 4, 8));
        ParamPoint pt = make_param_point(p, gamma, eta, rho);
        MajorizationCheck c = majorization_at(id, s, Transcription::corrected, pt, x, y);
        if (!c.holds) {
            ++rep.violations;
            if (!rep.first_violation) rep.first_violation = pt;
        }
        for (std::size_t k = 0; k < 4; ++k)
            if (!c.part_holds[k]) ++rep.part_violations[k];
    }
    return rep;
}

}  // namespace slh
