#pragma once

/**
 * @file catalog.hpp
 * @brief Named sequences, their word/tiling models, cross-checks and identity bindings.
 *
 * Indexing is pinned by value: every preset's terms are what the recurrence
 * produces from its initial pair, and `note` records how the customary name
 * lines up with that indexing.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "recur2/error.hpp"
#include "recur2/exact_algebra.hpp"
#include "recur2/identities.hpp"
#include "recur2/recurrence.hpp"
#include "recur2/words.hpp"

namespace recur2 {

enum class PresetId {
    fibonacci,
    lucas,
    fibonacci_poly,
    pell,
    jacobsthal,
    two_color_tiling,
    nonneg_integers,
    fib_bisection,
    mersenne,
    q3_halved,
    chebyshev_U,
    chebyshev_T,
};

inline constexpr PresetId all_preset_ids[] = {
    PresetId::fibonacci,       PresetId::lucas,         PresetId::fibonacci_poly, PresetId::pell,
    PresetId::jacobsthal,      PresetId::two_color_tiling, PresetId::nonneg_integers, PresetId::fib_bisection,
    PresetId::mersenne,        PresetId::q3_halved,     PresetId::chebyshev_U,    PresetId::chebyshev_T,
};

constexpr std::string_view to_string(PresetId id) noexcept {
    switch (id) {
        case PresetId::fibonacci: return "fibonacci";
        case PresetId::lucas: return "lucas";
        case PresetId::fibonacci_poly: return "fibonacci_poly";
        case PresetId::pell: return "pell";
        case PresetId::jacobsthal: return "jacobsthal";
        case PresetId::two_color_tiling: return "two_color_tiling";
        case PresetId::nonneg_integers: return "nonneg_integers";
        case PresetId::fib_bisection: return "fib_bisection";
        case PresetId::mersenne: return "mersenne";
        case PresetId::q3_halved: return "q3_halved";
        case PresetId::chebyshev_U: return "chebyshev_U";
        case PresetId::chebyshev_T: return "chebyshev_T";
    }
    return "unknown";
}

inline PresetId preset_from_string(std::string_view name) {
    for (PresetId id : all_preset_ids) {
        if (to_string(id) == name) return id;
    }
    throw error(errc::unknown_preset, "no preset named '" + std::string(name) + "'");
}

struct ClosedForm {
    std::string description;
    /// True iff `value` is the closed-form term at index n (integer arithmetic only).
    std::function<bool(std::size_t n, const RingValue& value)> matches;
};

struct Preset {
    PresetId id;
    RingValue x;
    RingValue y;
    InitialPair init;
    std::optional<WordConstraint> word_model;
    std::optional<TilingParams> tiling;
    std::optional<ClosedForm> closed_form;
    /// Terms 0..7, written out by hand.
    std::vector<RingValue> reference_values;
    std::string note;

    std::string_view name() const noexcept { return to_string(id); }
    RingTag tag() const noexcept { return x.tag(); }
    RecurrenceSpec spec() const { return {x, y, init}; }
    bool canonical_init() const { return init.first.is_zero() && init.second == one_like(x); }
};

namespace detail {

inline IntPoly poly(std::vector<ExactInt> c, const char* var = "z") { return IntPoly(std::move(c), var); }

inline std::vector<RingValue> ints(std::initializer_list<long long> values) {
    std::vector<RingValue> out;
    for (long long v : values) out.emplace_back(ExactInt(v));
    return out;
}

inline ExactInt pow_int(long long base, std::size_t e) {
    ExactInt r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= base;
    return r;
}

/// F(n) by the textbook pair iteration, kept apart from RecurrenceSpec.
inline ExactInt fibonacci_number(std::size_t n) {
    ExactInt a = 0, b = 1;
    for (std::size_t i = 0; i < n; ++i) {
        ExactInt t = a + b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

}  // namespace detail

inline Preset get_preset(PresetId id) {
    using detail::ints;
    using detail::poly;
    switch (id) {
        case PresetId::fibonacci:
            return {id, 1, 1, {0, 1}, parse_constraint("alphabet=2; evenrun=0"), std::nullopt, std::nullopt,
                    ints({0, 1, 1, 2, 3, 5, 8, 13}),
                    "a(n) = F(n). Binary words of length n with only even runs of 0 number a(n+1) = F(n+1); "
                    "the shifted forms a(n+1) = F(n) and 'F(n) counts length n' are off by one against these values."};
        case PresetId::lucas:
            return {id, 1, 1, {2, 1}, std::nullopt, std::nullopt, std::nullopt, ints({2, 1, 3, 4, 7, 11, 18, 29}),
                    "L(0) = 2, L(1) = 1."};
        case PresetId::fibonacci_poly: {
            const RingValue x = poly({0, 1}, "x");
            return {id, x, poly({1}, "x"), canonical_init(x), std::nullopt, std::nullopt, std::nullopt,
                    {poly({}, "x"), poly({1}, "x"), poly({0, 1}, "x"), poly({1, 0, 1}, "x"), poly({0, 2, 0, 1}, "x"),
                     poly({1, 0, 3, 0, 1}, "x"), poly({0, 3, 0, 4, 0, 1}, "x"), poly({1, 0, 6, 0, 5, 0, 1}, "x")},
                    "a(n) = F_n(x) with F_1(x) = 1, F_2(x) = x. Integer x > 0 gives words over x + 1 letters "
                    "with one even-run letter (x letters would undercount)."};
        }
        case PresetId::pell:
            return {id, 2, 1, {0, 1}, parse_constraint("alphabet=3; evenrun=0"), std::nullopt, std::nullopt,
                    ints({0, 1, 2, 5, 12, 29, 70, 169}),
                    "a(n) = P(n). Ternary words of length n in which 0 has only even runs number a(n+1)."};
        case PresetId::jacobsthal:
            return {id, 1, 2, {0, 1}, parse_constraint("alphabet=3; evenrun=0,1"), std::nullopt, std::nullopt,
                    ints({0, 1, 1, 3, 5, 11, 21, 43}),
                    "a(n) = J(n). Ternary words of length n in which 0 and 1 have only even runs number a(n+1). "
                    "The variant sum with C(n-k-1, k-1) is wrong: at n = 4 it gives 2, not J(4) = 5."};
        case PresetId::two_color_tiling:
            return {id, 2, 2, {0, 1}, parse_constraint("alphabet=4; evenrun=0,1"), TilingParams{2, 2}, std::nullopt,
                    ints({0, 1, 2, 6, 16, 44, 120, 328}),
                    "Boards of length n tiled with squares and dominoes in two colours each number a(n+1). "
                    "The word model encodes a domino of colour i as the pair ii."};
        case PresetId::nonneg_integers:
            return {id, 2, -1, {0, 1}, parse_constraint("alphabet=2; forbid=01"), std::nullopt,
                    ClosedForm{"a(n) = n", [](std::size_t n, const RingValue& v) { return v == RingValue(ExactInt(n)); }},
                    ints({0, 1, 2, 3, 4, 5, 6, 7}), "Binary words of length n avoiding 01 number n + 1 = a(n+1)."};
        case PresetId::fib_bisection:
            return {id, 3, -1, {0, 1}, parse_constraint("alphabet=3; forbid=01"), std::nullopt,
                    ClosedForm{"a(n) = F(2n)",
                               [](std::size_t n, const RingValue& v) { return v == RingValue(detail::fibonacci_number(2 * n)); }},
                    ints({0, 1, 3, 8, 21, 55, 144, 377}),
                    "a(n) = F(2n) (a(2) = 3 = F(4)); not a(n+1) = F(2n). "
                    "Ternary words of length n avoiding 01 number a(n+1) = F(2n+2)."};
        case PresetId::mersenne:
            return {id, 3, -2, {0, 1}, parse_constraint("alphabet=3; forbid=01,02"), std::nullopt,
                    ClosedForm{"a(n) = 2^n - 1",
                               [](std::size_t n, const RingValue& v) { return v == RingValue(ExactInt(detail::pow_int(2, n) - 1)); }},
                    ints({0, 1, 3, 7, 15, 31, 63, 127}),
                    "Ternary words of length n avoiding 01 and 02 number 2^(n+1) - 1 = a(n+1)."};
        case PresetId::q3_halved:
            return {id, 4, -3, {0, 1}, parse_constraint("alphabet=4; forbid=01,02,03"), std::nullopt,
                    ClosedForm{"2 a(n) = 3^n - 1",
                               [](std::size_t n, const RingValue& v) {
                                   return v.is_integer() && 2 * v.as_integer() == detail::pow_int(3, n) - 1;
                               }},
                    ints({0, 1, 4, 13, 40, 121, 364, 1093}),
                    "Quaternary words of length n avoiding 01, 02, 03 number a(n+1) = (3^(n+1) - 1)/2; "
                    "not (3^n - 1)/2."};
        case PresetId::chebyshev_U: {
            const RingValue x = poly({0, 2});
            return {id, x, poly({-1}), canonical_init(x), std::nullopt, std::nullopt, std::nullopt,
                    {poly({}), poly({1}), poly({0, 2}), poly({-1, 0, 4}), poly({0, -4, 0, 8}), poly({1, 0, -12, 0, 16}),
                     poly({0, 6, 0, -32, 0, 32}), poly({-1, 0, 24, 0, -80, 0, 64})},
                    "a(n) = U_{n-1}(z) with the usual U_0 = 1; not U_n(z)."};
        }
        case PresetId::chebyshev_T: {
            const RingValue x = poly({0, 2});
            return {id, x, poly({-1}), {poly({1}), poly({0, 1})}, std::nullopt, std::nullopt, std::nullopt,
                    {poly({1}), poly({0, 1}), poly({-1, 0, 2}), poly({0, -3, 0, 4}), poly({1, 0, -8, 0, 8}),
                     poly({0, 5, 0, -20, 0, 16}), poly({-1, 0, 18, 0, -48, 0, 32}), poly({0, -7, 0, 56, 0, -112, 0, 64})},
                    "T_0(z) = 1, T_1(z) = z."};
        }
    }
    throw error(errc::unknown_preset, "unknown preset id");
}

inline Preset get_preset(std::string_view name) { return get_preset(preset_from_string(name)); }

inline std::vector<Preset> all_presets() {
    std::vector<Preset> out;
    for (PresetId id : all_preset_ids) out.push_back(get_preset(id));
    return out;
}

struct CrosscheckRow {
    std::size_t n = 0;
    RingValue recurrence;
    RingValue explicit_value;
    std::optional<ExactInt> word_count;    // words of length n-1
    std::optional<ExactInt> tiling_count;  // boards of length n-1
    std::optional<bool> closed_form;
    std::optional<bool> reference;
    bool agree = false;
};

struct CrosscheckReport {
    PresetId preset;
    std::vector<CrosscheckRow> rows;

    bool all_agree() const {
        return std::all_of(rows.begin(), rows.end(), [](const CrosscheckRow& r) { return r.agree; });
    }
};

/// Term n of the solution with initial pair (t0, t1), via the closed sum:
/// t(n) = t1 a(n) + y t0 a(n-1) for n >= 1.
inline RingValue explicit_general(const RingValue& x, const RingValue& y, const InitialPair& init, std::size_t n) {
    if (n == 0) return init.first;
    return init.second * explicit_term(x, y, n) + y * init.first * explicit_term(x, y, n - 1);
}

inline CrosscheckReport crosscheck(PresetId id, std::size_t n_max) {
    if (n_max < 2) throw error(errc::index_constraint, "crosscheck needs n_max >= 2");
    const Preset p = get_preset(id);
    const SequenceWindow w = generate(p.spec(), n_max);

    std::vector<ExactInt> words;
    if (p.word_model) words = count_series(build_automaton(*p.word_model), n_max - 1);

    CrosscheckReport report{id, {}};
    for (std::size_t n = 0; n <= n_max; ++n) {
        CrosscheckRow row;
        row.n = n;
        row.recurrence = w.at(n);
        row.explicit_value = explicit_general(p.x, p.y, p.init, n);
        bool agree = row.explicit_value == row.recurrence;
        if (n >= 1 && p.word_model) {
            row.word_count = words[n - 1];
            agree = agree && RingValue(*row.word_count) == row.recurrence;
        }
        if (n >= 1 && p.tiling) {
            row.tiling_count = count_colored_tilings(n - 1, p.tiling->colors1, p.tiling->colors2);
            agree = agree && RingValue(*row.tiling_count) == row.recurrence;
        }
        if (p.closed_form) {
            row.closed_form = p.closed_form->matches(n, row.recurrence);
            agree = agree && *row.closed_form;
        }
        if (n < p.reference_values.size()) {
            row.reference = p.reference_values[n] == row.recurrence;
            agree = agree && *row.reference;
        }
        row.agree = agree;
        report.rows.push_back(std::move(row));
    }
    return report;
}

/// One instance of a named identity: the generic checker's report plus the
/// identity in its customary closed form, evaluated directly.
struct BindingOutcome {
    std::string binding;
    IdentityReport report;
    RingValue named_lhs;
    RingValue named_rhs;

    bool ok() const { return report.holds && named_lhs == named_rhs; }
};

struct IdentityBinding {
    std::string name;
    std::vector<PresetId> presets;
    Identity identity;
    std::string parameters;
    std::string expected;
    std::int64_t default_limit;
    std::function<std::vector<BindingOutcome>(std::int64_t limit)> run;
};

namespace detail {

inline RingValue sign_pow(std::int64_t e) { return e % 2 == 0 ? RingValue(1) : RingValue(-1); }

inline SequenceWindow preset_window(PresetId id, std::size_t n_max) { return generate(get_preset(id).spec(), n_max); }

}  // namespace detail

inline std::vector<IdentityBinding> identity_bindings() {
    using detail::preset_window;
    using detail::sign_pow;
    std::vector<IdentityBinding> out;

    out.push_back({"lucas_fibonacci_cassini", {PresetId::lucas, PresetId::fibonacci}, Identity::cassini,
                   "b = L, c = F, k = 0..limit", "L(k) F(k+1) - L(k+1) F(k) = 2 (-1)^k", 100,
                   [](std::int64_t limit) {
                       const auto L = preset_window(PresetId::lucas, limit + 2);
                       const auto F = preset_window(PresetId::fibonacci, limit + 2);
                       std::vector<BindingOutcome> r;
                       for (std::int64_t k = 0; k <= limit; ++k) {
                           const auto K = static_cast<std::size_t>(k);
                           r.push_back({"lucas_fibonacci_cassini", check_cassini(1, 1, {2, 1}, {0, 1}, k),
                                        L.at(K) * F.at(K + 1) - L.at(K + 1) * F.at(K), RingValue(2) * sign_pow(k)});
                       }
                       return r;
                   }});

    out.push_back({"jacobsthal_cassini", {PresetId::jacobsthal}, Identity::cassini,
                   "b = (J1, J2), c = (J0, J1), k = 0..limit", "J(k+1)^2 - J(k) J(k+2) = (-2)^k", 60,
                   [](std::int64_t limit) {
                       const auto J = preset_window(PresetId::jacobsthal, limit + 3);
                       std::vector<BindingOutcome> r;
                       for (std::int64_t k = 0; k <= limit; ++k) {
                           const auto K = static_cast<std::size_t>(k);
                           r.push_back({"jacobsthal_cassini", check_cassini(1, 2, {1, 1}, {0, 1}, k),
                                        J.at(K + 1) * J.at(K + 1) - J.at(K) * J.at(K + 2),
                                        pow(RingValue(-2), static_cast<std::uint64_t>(k))});
                       }
                       return r;
                   }});

    out.push_back({"chebyshev_t_cassini", {PresetId::chebyshev_T}, Identity::cassini,
                   "b = (T1, T2), c = (T0, T1), k = 0..limit", "T(k+1)^2 - T(k) T(k+2) = 1 - z^2", 20,
                   [](std::int64_t limit) {
                       const Preset t = get_preset(PresetId::chebyshev_T);
                       const auto T = preset_window(PresetId::chebyshev_T, limit + 3);
                       const RingValue one_minus_z2 = IntPoly({1, 0, -1});
                       std::vector<BindingOutcome> r;
                       for (std::int64_t k = 0; k <= limit; ++k) {
                           const auto K = static_cast<std::size_t>(k);
                           r.push_back({"chebyshev_t_cassini",
                                        check_cassini(t.x, t.y, {T.at(1), T.at(2)}, {T.at(0), T.at(1)}, k),
                                        T.at(K + 1) * T.at(K + 1) - T.at(K) * T.at(K + 2), one_minus_z2});
                       }
                       return r;
                   }});

    out.push_back({"fibonacci_docagne", {PresetId::fibonacci}, Identity::docagne,
                   "b = (F1, F2), c = (F0, F1), k, m = 0..limit", "F(k+1) F(k+m) - F(k+m+1) F(k) = (-1)^k F(m)", 50,
                   [](std::int64_t limit) {
                       const auto F = preset_window(PresetId::fibonacci, 2 * limit + 2);
                       std::vector<BindingOutcome> r;
                       for (std::int64_t k = 0; k <= limit; ++k) {
                           for (std::int64_t m = 0; m <= limit; ++m) {
                               const auto K = static_cast<std::size_t>(k), M = static_cast<std::size_t>(m);
                               r.push_back({"fibonacci_docagne", check_docagne_general(1, 1, {1, 1}, {0, 1}, k, m),
                                            F.at(K + 1) * F.at(K + M) - F.at(K + M + 1) * F.at(K),
                                            sign_pow(k) * F.at(M)});
                           }
                       }
                       return r;
                   }});

    out.push_back({"fibonacci_reduced_docagne", {PresetId::fibonacci}, Identity::reduced_docagne,
                   "b = (Fp, Fp+1), c = (Fq, Fq+1), m, p, q = 0..limit",
                   "F(m) (F(p) F(q+1) - F(p+1) F(q)) = F(p) F(m+q) - F(m+p) F(q)", 20,
                   [](std::int64_t limit) {
                       const auto F = preset_window(PresetId::fibonacci, 2 * limit + 2);
                       std::vector<BindingOutcome> r;
                       for (std::int64_t m = 0; m <= limit; ++m) {
                           for (std::size_t p = 0; p <= static_cast<std::size_t>(limit); ++p) {
                               for (std::size_t q = 0; q <= static_cast<std::size_t>(limit); ++q) {
                                   const auto M = static_cast<std::size_t>(m);
                                   r.push_back({"fibonacci_reduced_docagne",
                                                check_reduced_docagne(1, 1, {F.at(p), F.at(p + 1)}, {F.at(q), F.at(q + 1)}, m),
                                                F.at(M) * (F.at(p) * F.at(q + 1) - F.at(p + 1) * F.at(q)),
                                                F.at(p) * F.at(M + q) - F.at(M + p) * F.at(q)});
                               }
                           }
                       }
                       return r;
                   }});

    out.push_back({"chebyshev_u_reduced_docagne", {PresetId::chebyshev_U}, Identity::reduced_docagne,
                   "U(n) = a(n+1); b = (Up, Up+1), c = (Uq, Uq+1), m = 0..limit, p, q = 0..min(limit, 6)",
                   "U(m-1) (U(p) U(q+1) - U(p+1) U(q)) = U(p) U(m+q) - U(m+p) U(q)", 12,
                   [](std::int64_t limit) {
                       // a(n) = U_{n-1}, so U_j is A.at(j + 1) and the checker's a(m) is U_{m-1}.
                       const Preset u = get_preset(PresetId::chebyshev_U);
                       const auto A = preset_window(PresetId::chebyshev_U, 2 * limit + 3);
                       const auto U = [&](std::size_t j) { return A.at(j + 1); };
                       const std::size_t pq = static_cast<std::size_t>(std::min<std::int64_t>(limit, 6));
                       std::vector<BindingOutcome> r;
                       for (std::int64_t m = 1; m <= limit; ++m) {
                           for (std::size_t p = 0; p <= pq; ++p) {
                               for (std::size_t q = 0; q <= pq; ++q) {
                                   const auto M = static_cast<std::size_t>(m);
                                   const auto report =
                                       check_reduced_docagne(u.x, u.y, {U(p), U(p + 1)}, {U(q), U(q + 1)}, m);
                                   r.push_back({"chebyshev_u_reduced_docagne", report,
                                                U(M - 1) * (U(p) * U(q + 1) - U(p + 1) * U(q)),
                                                U(p) * U(M + q) - U(M + p) * U(q)});
                               }
                           }
                       }
                       return r;
                   }});

    out.push_back({"fibonacci_vajda", {PresetId::fibonacci}, Identity::vajda, "b = a = F, k, m, p = 0..limit",
                   "F(k+p) F(k+m) - F(k+m+p) F(k) = (-1)^k F(m) F(p)", 20, [](std::int64_t limit) {
                       const auto F = preset_window(PresetId::fibonacci, 3 * limit + 1);
                       std::vector<BindingOutcome> r;
                       for (std::size_t k = 0; k <= static_cast<std::size_t>(limit); ++k)
                           for (std::size_t m = 0; m <= static_cast<std::size_t>(limit); ++m)
                               for (std::size_t p = 0; p <= static_cast<std::size_t>(limit); ++p) {
                                   r.push_back({"fibonacci_vajda",
                                                check_vajda(1, 1, {0, 1}, std::int64_t(k), std::int64_t(m), std::int64_t(p)),
                                                F.at(k + p) * F.at(k + m) - F.at(k + m + p) * F.at(k),
                                                sign_pow(std::int64_t(k)) * F.at(m) * F.at(p)});
                               }
                       return r;
                   }});

    out.push_back({"lucas_vajda", {PresetId::lucas, PresetId::fibonacci}, Identity::vajda,
                   "b = L, a = F, k, m, p = 0..limit", "L(k+p) F(k+m) - L(k+m+p) F(k) = (-1)^k F(m) L(p)", 20,
                   [](std::int64_t limit) {
                       const auto F = preset_window(PresetId::fibonacci, 3 * limit + 1);
                       const auto L = preset_window(PresetId::lucas, 3 * limit + 1);
                       std::vector<BindingOutcome> r;
                       for (std::size_t k = 0; k <= static_cast<std::size_t>(limit); ++k)
                           for (std::size_t m = 0; m <= static_cast<std::size_t>(limit); ++m)
                               for (std::size_t p = 0; p <= static_cast<std::size_t>(limit); ++p) {
                                   r.push_back({"lucas_vajda",
                                                check_vajda(1, 1, {2, 1}, std::int64_t(k), std::int64_t(m), std::int64_t(p)),
                                                L.at(k + p) * F.at(k + m) - L.at(k + m + p) * F.at(k),
                                                sign_pow(std::int64_t(k)) * F.at(m) * L.at(p)});
                               }
                       return r;
                   }});

    out.push_back({"mersenne_vajda", {PresetId::mersenne}, Identity::vajda, "b = a = M, k, m, p = 0..limit",
                   "(2^(k+p)-1)(2^(k+m)-1) - (2^(k+m+p)-1)(2^k-1) = 2^k (2^m-1)(2^p-1)", 20,
                   [](std::int64_t limit) {
                       const auto M = [](std::size_t e) { return RingValue(ExactInt(detail::pow_int(2, e) - 1)); };
                       std::vector<BindingOutcome> r;
                       for (std::size_t k = 0; k <= static_cast<std::size_t>(limit); ++k)
                           for (std::size_t m = 0; m <= static_cast<std::size_t>(limit); ++m)
                               for (std::size_t p = 0; p <= static_cast<std::size_t>(limit); ++p) {
                                   r.push_back({"mersenne_vajda",
                                                check_vajda(3, -2, {0, 1}, std::int64_t(k), std::int64_t(m), std::int64_t(p)),
                                                M(k + p) * M(k + m) - M(k + m + p) * M(k),
                                                RingValue(detail::pow_int(2, k)) * M(m) * M(p)});
                               }
                       return r;
                   }});

    out.push_back({"integers_vajda", {PresetId::nonneg_integers}, Identity::vajda, "b = a = n, k, m, p = 0..limit",
                   "(k+p)(k+m) - (k+m+p) k = m p", 30, [](std::int64_t limit) {
                       std::vector<BindingOutcome> r;
                       for (std::int64_t k = 0; k <= limit; ++k)
                           for (std::int64_t m = 0; m <= limit; ++m)
                               for (std::int64_t p = 0; p <= limit; ++p) {
                                   r.push_back({"integers_vajda", check_vajda(2, -1, {0, 1}, k, m, p),
                                                RingValue((k + p) * (k + m) - (k + m + p) * k), RingValue(m * p)});
                               }
                       return r;
                   }});

    const auto catalan_binding = [](std::string name, PresetId id, std::int64_t limit_default) {
        return IdentityBinding{
            name, {id}, Identity::catalan, "n = 0..limit, r = 0..n", "a(n)^2 - a(n-r) a(n+r) = (-y)^(n-r) a(r)^2",
            limit_default, [name, id](std::int64_t limit) {
                const Preset p = get_preset(id);
                const auto A = generate(p.spec(), static_cast<std::size_t>(2 * limit + 1));
                std::vector<BindingOutcome> r;
                for (std::size_t n = 0; n <= static_cast<std::size_t>(limit); ++n)
                    for (std::size_t i = 0; i <= n; ++i) {
                        r.push_back({name, check_catalan(p.x, p.y, std::int64_t(n), std::int64_t(i)),
                                     A.at(n) * A.at(n) - A.at(n - i) * A.at(n + i),
                                     pow(-p.y, n - i) * A.at(i) * A.at(i)});
                    }
                return r;
            }};
    };
    out.push_back(catalan_binding("pell_catalan", PresetId::pell, 50));
    out.push_back(catalan_binding("jacobsthal_catalan", PresetId::jacobsthal, 50));
    out.push_back(catalan_binding("chebyshev_u_catalan", PresetId::chebyshev_U, 25));

    out.push_back({"fibonacci_squares_difference", {PresetId::fibonacci}, Identity::four_param,
                   "b = a = F, p = m, q = k, 0 <= k <= m <= limit", "F(k+m)^2 - F(m-k)^2 = F(2k) F(2m)", 50,
                   [](std::int64_t limit) {
                       const auto F = preset_window(PresetId::fibonacci, 2 * limit + 2);
                       std::vector<BindingOutcome> r;
                       for (std::size_t m = 0; m <= static_cast<std::size_t>(limit); ++m)
                           for (std::size_t k = 0; k <= m; ++k) {
                               r.push_back({"fibonacci_squares_difference",
                                            check_four_param(1, 1, {0, 1}, std::int64_t(k), std::int64_t(m),
                                                             std::int64_t(m), std::int64_t(k)),
                                            F.at(k + m) * F.at(k + m) - F.at(m - k) * F.at(m - k),
                                            F.at(2 * k) * F.at(2 * m)});
                           }
                       return r;
                   }});

    out.push_back({"fibonacci_squares_sum", {PresetId::fibonacci}, Identity::four_param,
                   "b = a = F, p = m + 1, q = k + 1, 0 <= k <= m <= limit",
                   "F(k+m+1)^2 + F(m-k)^2 = F(2k+1) F(2m+1)", 50, [](std::int64_t limit) {
                       const auto F = preset_window(PresetId::fibonacci, 2 * limit + 2);
                       std::vector<BindingOutcome> r;
                       for (std::size_t m = 0; m <= static_cast<std::size_t>(limit); ++m)
                           for (std::size_t k = 0; k <= m; ++k) {
                               r.push_back({"fibonacci_squares_sum",
                                            check_four_param(1, 1, {0, 1}, std::int64_t(k), std::int64_t(m),
                                                             std::int64_t(m + 1), std::int64_t(k + 1)),
                                            F.at(k + m + 1) * F.at(k + m + 1) + F.at(m - k) * F.at(m - k),
                                            F.at(2 * k + 1) * F.at(2 * m + 1)});
                           }
                       return r;
                   }});
    return out;
}

/// Runs every binding whose name or presets match `selector` ("all" runs everything).
inline std::vector<BindingOutcome> run_bindings(std::string_view selector = "all") {
    std::vector<BindingOutcome> out;
    bool matched = false;
    for (const auto& b : identity_bindings()) {
        const bool hit = selector == "all" || selector == b.name ||
                         std::any_of(b.presets.begin(), b.presets.end(), [&](PresetId id) { return to_string(id) == selector; });
        if (!hit) continue;
        matched = true;
        auto results = b.run(b.default_limit);
        out.insert(out.end(), std::make_move_iterator(results.begin()), std::make_move_iterator(results.end()));
    }
    if (!matched) throw error(errc::unknown_preset, "no binding or preset named '" + std::string(selector) + "'");
    return out;
}

}  // namespace recur2
