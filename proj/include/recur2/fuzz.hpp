#pragma once

// Seeded random instances for every identity checker. Trial t of a run with
// seed s draws from its own generator seeded by (s, t), so results do not
// depend on trial order.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "recur2/exact_algebra.hpp"
#include "recur2/identities.hpp"
#include "recur2/recurrence.hpp"

namespace recur2 {

struct FuzzRanges {
    std::int64_t coeff_max = 9;
    std::int64_t init_max = 9;
    std::int64_t index_max = 25;
    // variable-coefficient identity: |u|, |v| <= var_coeff_max, n + 2 <= var_index_max + 2
    std::int64_t var_coeff_max = 5;
    std::int64_t var_index_max = 13;
};

class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::uint64_t trial) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                          static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32U)};
        engine_.seed(seq);
    }

    /// Uniform on [lo, hi]; rejection sampling keeps it platform-independent.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t draw;
        do {
            draw = engine_();
        } while (draw >= limit);
        return lo + static_cast<std::int64_t>(draw % span);
    }

    std::int64_t nonzero(std::int64_t max_abs) {
        const std::int64_t v = uniform(1, 2 * max_abs);
        return v <= max_abs ? v : max_abs - v;
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

inline IdentityReport random_instance(Identity id, TrialRng& rng, const FuzzRanges& r = {},
                                      VProduct convention = VProduct::shifted) {
    const auto coeff = [&] { return RingValue(rng.uniform(-r.coeff_max, r.coeff_max)); };
    const auto init = [&] {
        return InitialPair{rng.uniform(-r.init_max, r.init_max), rng.uniform(-r.init_max, r.init_max)};
    };
    const auto index = [&](std::int64_t lo = 0) { return rng.uniform(lo, r.index_max); };

    if (id == Identity::prop8) {
        const std::int64_t n = rng.uniform(0, r.var_index_max);
        const std::int64_t k = rng.uniform(0, n + 2);
        VarCoeffSpec coeffs;
        for (std::int64_t i = 0; i <= n + 1; ++i) coeffs.u.emplace_back(rng.uniform(-r.var_coeff_max, r.var_coeff_max));
        // v(0..n+2): the right-side product reaches v(k) with k = n + 2 under either convention.
        for (std::int64_t i = 0; i <= n + 2; ++i) coeffs.v.emplace_back(rng.nonzero(r.var_coeff_max));
        const InitialPair b = init();
        const InitialPair c = init();
        coeffs.init = b;
        return check_prop8(coeffs, b, c, k, n, convention);
    }

    const RingValue x = coeff();
    const RingValue y = rng.nonzero(r.coeff_max);
    switch (id) {
        case Identity::docagne: {
            const InitialPair b = init(), c = init();
            const std::int64_t k = index(), m = index();
            return check_docagne_general(x, y, b, c, k, m);
        }
        case Identity::cassini: {
            const InitialPair b = init(), c = init();
            return check_cassini(x, y, b, c, index());
        }
        case Identity::index_reduction: {
            const InitialPair b = init(), c = init();
            const std::int64_t k = index(), m = index();
            const std::int64_t p = rng.uniform(0, k);
            return check_index_reduction(x, y, b, c, k, m, p);
        }
        case Identity::reduced_docagne: {
            const InitialPair b = init(), c = init();
            return check_reduced_docagne(x, y, b, c, index());
        }
        case Identity::four_param: {
            const InitialPair b = init();
            const std::int64_t k = index();
            const std::int64_t m = index(k);
            const std::int64_t q = index();
            const std::int64_t p = index(q);
            return check_four_param(x, y, b, k, m, p, q);
        }
        case Identity::vajda: {
            const InitialPair b = init();
            const std::int64_t k = index(), m = index(), p = index();
            return check_vajda(x, y, b, k, m, p);
        }
        case Identity::catalan: {
            const std::int64_t n = index();
            const std::int64_t rr = rng.uniform(0, n);
            return check_catalan(x, y, n, rr);
        }
        case Identity::prop8: break;
    }
    throw error(errc::index_constraint, "unreachable");
}

struct FuzzSummary {
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::map<Identity, std::uint64_t> covered;
    /// (trial index, failing report), in trial order.
    std::vector<std::pair<std::uint64_t, IdentityReport>> failures;
};

/// Trial t exercises all_identities[t % 8].
inline FuzzSummary run_fuzz(std::uint64_t seed, std::uint64_t trials, const FuzzRanges& ranges = {}) {
    FuzzSummary s;
    s.seed = seed;
    s.trials = trials;
    constexpr std::size_t kinds = std::size(all_identities);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const Identity id = all_identities[t % kinds];
        TrialRng rng(seed, t);
        IdentityReport report = random_instance(id, rng, ranges);
        ++s.covered[id];
        if (!report.holds) s.failures.emplace_back(t, std::move(report));
    }
    return s;
}

}  // namespace recur2
