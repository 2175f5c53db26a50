#pragma once

#include <atomic>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "clausen/catalog.hpp"
#include "clausen/errors.hpp"
#include "clausen/rational.hpp"
#include "clausen/series.hpp"

// Seeded randomized verification sweeps over the catalog.  Binding generation
// is sequential per theorem on its own PRNG stream, so the drawn instances
// depend only on (seed, theorem id, trial index); verification may fan out
// across worker threads, each writing to its preassigned record slot.

namespace clausen {

/// PRNG contract string embedded in reports: mt19937_64 seeded from
/// seed_seq{seed, fnv1a64(theorem id)} (32-bit chunks, low first), all draws
/// by modulo.  Both algorithms are fully specified, so the stream is portable.
inline constexpr const char* sweep_prng_id =
    "mt19937_64(seed_seq{seed$lo,seed$hi,fnv1a64(id)$lo,fnv1a64(id)$hi}); modulo draws";

struct SweepConfig {
    std::vector<std::string> theorems;  // empty means the whole catalog
    long long trials = 100;
    std::uint64_t seed = 0;
    long long m_max = 8;
    long long k_max = 8;
    long long bound = 20;   // |numerator| <= bound, 1 <= denominator <= bound
    RealHP float_tol = 1e-10L;
    int jobs = 1;
    int max_attempts = 500;  // rejection budget per trial
};

namespace detail {

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (const unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::mt19937_64 sweep_engine(std::uint64_t seed, std::string_view key) {
    const std::uint64_t h = fnv1a64(key);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
    return std::mt19937_64(seq);
}

inline long long draw_int(std::mt19937_64& g, long long lo, long long hi) {
    return lo + static_cast<long long>(g() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Rational draw_rational(std::mt19937_64& g, long long bound) {
    const long long num = draw_int(g, -bound, bound);
    const long long den = draw_int(g, 1, bound);
    return Rational(num, den);
}

/// Sum(denominator params) - sum(numerator params); controls z = 1 behavior.
inline Rational convergence_margin(const HypergeometricSpec& s) {
    Rational w(0);
    for (const auto& b : s.den) w += b;
    for (const auto& a : s.num) w -= a;
    return w;
}

/// Reflection-based entries blow up (or lose the sin factor entirely) at
/// integer alpha, so the generator never proposes one.
inline bool needs_noninteger_alpha(const std::string& id) {
    return id == "dixon.nt-reflect" || id == "dixon.term-gamma";
}

} // namespace detail

/// One accepted draw: the binding, the instance it produced, and how many
/// proposals the rejection loop consumed (a deterministic work counter).
struct SweepDraw {
    Binding binding;
    int attempts = 0;
};

/// Draw a valid binding for one entry.  Rejections: instantiate() failures
/// (side conditions, in-range poles), exact closed forms with a vanishing
/// denominator, and, for float entries, convergence margin below 1/4,
/// unusable alpha, or a closed form outside [1e-8, 1e8].
inline SweepDraw draw_binding(const TheoremEntry& e, std::mt19937_64& g, const SweepConfig& cfg) {
    const bool want_alpha_generic = detail::needs_noninteger_alpha(e.id());
    for (int attempt = 1; attempt <= cfg.max_attempts; ++attempt) {
        Binding b;
        if (e.uses_m) b.m = detail::draw_int(g, 1, cfg.m_max);
        if (e.uses_k) b.k = detail::draw_int(g, 1, cfg.k_max);
        for (const auto& name : e.rationals) {
            const Rational r = detail::draw_rational(g, cfg.bound);
            if (name == "alpha") b.alpha = r;
            else if (name == "beta") b.beta = r;
            else if (name == "gamma") b.gamma = r;
            else b.delta = r;
        }
        try {
            const TheoremInstance inst = instantiate(e.id(), b);
            if (e.mode == TheoremMode::Exact) {
                // Side conditions are inequalities on documented parameters;
                // they do not rule out every zero a denominator Pochhammer can
                // hit.  Identities only claim points where both sides exist,
                // so a pole in the closed form sends the draw back.
                (void)e.rhs_exact(inst);
            } else {
                if (want_alpha_generic && b.alpha && is_integer(*b.alpha)) continue;
                const HypergeometricSpec spec = e.lhs(inst);
                if (!detail::has_terminating_numerator(spec) &&
                    detail::convergence_margin(spec) < Rational(1, 4))
                    continue;
                const RealHP rhs = std::abs(e.rhs_float(inst));
                if (!(rhs >= 1e-8L && rhs <= 1e8L)) continue;
            }
            return {b, attempt};
        } catch (const evaluation_error&) {
            // resample
        }
    }
    throw invalid_instance("no valid binding for " + e.id() + " within the attempt budget");
}

struct SweepRecord {
    long long index = 0;
    std::string theorem;
    Binding binding;
    int attempts = 0;
    VerificationReport report;
};

struct SweepResult {
    SweepConfig config;
    std::vector<SweepRecord> records;
    long long equal = 0, mismatch = 0, inapplicable = 0;
};

/// Resolve a filter to catalog entries, in catalog order for "all"/empty and
/// in the given order otherwise.  Unknown ids throw invalid_instance.
inline std::vector<const TheoremEntry*> resolve_theorems(const std::vector<std::string>& filter) {
    std::vector<const TheoremEntry*> picked;
    if (filter.empty() || (filter.size() == 1 && filter[0] == "all")) {
        for (const auto& e : theorem_catalog()) picked.push_back(&e);
        return picked;
    }
    for (const auto& id : filter) picked.push_back(&find_theorem(id));
    return picked;
}

inline SweepResult run_sweep(const SweepConfig& cfg) {
    if (cfg.trials < 0) throw invalid_instance("trials must be >= 0");
    if (cfg.m_max < 1 || cfg.k_max < 1 || cfg.bound < 1)
        throw invalid_instance("parameter bounds must be >= 1");

    SweepResult result;
    result.config = cfg;

    // sequential generation: one PRNG stream per theorem, trials in order
    const auto entries = resolve_theorems(cfg.theorems);
    for (const auto* e : entries) {
        auto g = detail::sweep_engine(cfg.seed, e->id());
        for (long long t = 0; t < cfg.trials; ++t) {
            SweepRecord rec;
            rec.index = static_cast<long long>(result.records.size());
            rec.theorem = e->id();
            const SweepDraw draw = draw_binding(*e, g, cfg);
            rec.binding = draw.binding;
            rec.attempts = draw.attempts;
            result.records.push_back(std::move(rec));
        }
    }

    // verification is pure; fan out by record index
    const int jobs = std::max(1, cfg.jobs);
    std::atomic<std::size_t> next{0};
    const auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= result.records.size()) return;
            SweepRecord& rec = result.records[i];
            const TheoremInstance inst = instantiate(rec.theorem, rec.binding);
            rec.report = verify(inst, cfg.float_tol);
        }
    };
    if (jobs == 1 || result.records.size() < 2) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (const auto& rec : result.records) {
        if (rec.report.verdict == "equal") ++result.equal;
        else if (rec.report.verdict == "mismatch") ++result.mismatch;
        else ++result.inapplicable;
    }
    return result;
}

} // namespace clausen
