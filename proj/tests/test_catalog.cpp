#include <gtest/gtest.h>

#include "oracles.hpp"
#include "recur2/catalog.hpp"

using namespace recur2;

TEST(Catalog, NamesRoundTrip) {
    EXPECT_EQ(all_presets().size(), 12U);
    for (PresetId id : all_preset_ids) EXPECT_EQ(preset_from_string(to_string(id)), id);
    try {
        preset_from_string("tribonacci");
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::unknown_preset);
    }
}

TEST(Catalog, GetPresetExamples) {
    const auto m = get_preset("mersenne");
    EXPECT_EQ(m.x, RingValue(3));
    EXPECT_EQ(m.y, RingValue(-2));
    EXPECT_TRUE(m.canonical_init());
    EXPECT_EQ(generate(m.spec(), 7).values, m.reference_values);

    const auto l = get_preset(PresetId::lucas);
    EXPECT_FALSE(l.canonical_init());
    EXPECT_EQ(l.init.first, RingValue(2));
    EXPECT_EQ(l.reference_values.at(7), RingValue(29));

    EXPECT_EQ(get_preset("q3_halved").reference_values.at(4), RingValue(40));
}

TEST(Catalog, IntegerReferenceValuesMatchIteration) {
    for (const auto& p : all_presets()) {
        if (p.tag() != RingTag::integer) continue;
        ASSERT_EQ(p.reference_values.size(), 8U);
        const auto ref = oracle::iterate(static_cast<long long>(p.x.as_integer()), static_cast<long long>(p.y.as_integer()),
                                         static_cast<long long>(p.init.first.as_integer()),
                                         static_cast<long long>(p.init.second.as_integer()), 7);
        for (std::size_t n = 0; n < 8; ++n) EXPECT_EQ(p.reference_values[n], RingValue(ref[n])) << p.name() << " " << n;
    }
}

TEST(Catalog, ClosedForms) {
    const auto ints = generate(get_preset("nonneg_integers").spec(), 40);
    const auto bis = generate(get_preset("fib_bisection").spec(), 40);
    const auto fib = oracle::iterate(1, 1, 0, 1, 80);
    const auto mer = generate(get_preset("mersenne").spec(), 40);
    const auto q3 = generate(get_preset("q3_halved").spec(), 40);
    ExactInt two = 1, three = 1;
    for (std::size_t n = 0; n <= 40; ++n) {
        EXPECT_EQ(ints.at(n), RingValue(ExactInt(n)));
        EXPECT_EQ(bis.at(n), RingValue(fib[2 * n]));
        EXPECT_EQ(mer.at(n), RingValue(ExactInt(two - 1)));
        EXPECT_EQ(q3.at(n), RingValue(ExactInt((three - 1) / 2)));
        two *= 2;
        three *= 3;
    }
    for (const auto& p : all_presets()) {
        if (!p.closed_form) continue;
        const auto w = generate(p.spec(), 40);
        for (std::size_t n = 0; n <= 40; ++n) EXPECT_TRUE(p.closed_form->matches(n, w.at(n))) << p.name() << " " << n;
        EXPECT_FALSE(p.closed_form->matches(5, w.at(5) + RingValue(1)));
    }
}

TEST(Catalog, PolynomialPresetsAtPoints) {
    const auto u = generate(get_preset("chebyshev_U").spec(), 30);
    const auto t = generate(get_preset("chebyshev_T").spec(), 30);
    const auto f = generate(get_preset("fibonacci_poly").spec(), 30);
    const auto pell = oracle::iterate(2, 1, 0, 1, 30);
    const auto fib = oracle::iterate(1, 1, 0, 1, 30);
    for (std::size_t n = 0; n <= 30; ++n) {
        const auto N = static_cast<long long>(n);
        EXPECT_EQ(u.at(n).evaluated_at(1), RingValue(N));
        EXPECT_EQ(u.at(n).evaluated_at(-1), RingValue(n % 2 == 1 ? N : -N));
        EXPECT_EQ(t.at(n).evaluated_at(1), RingValue(1));
        EXPECT_EQ(t.at(n).evaluated_at(-1), RingValue(n % 2 == 0 ? 1 : -1));
        EXPECT_EQ(t.at(n).evaluated_at(0), RingValue(n % 4 == 0 ? 1 : n % 4 == 2 ? -1 : 0));
        EXPECT_EQ(f.at(n).evaluated_at(1), RingValue(fib[n]));
        EXPECT_EQ(f.at(n).evaluated_at(2), RingValue(pell[n]));
    }
    EXPECT_EQ(u.at(3).to_string(), "4z^2 - 1");
    EXPECT_EQ(f.at(3).to_string(), "x^2 + 1");
}

TEST(Catalog, ExplicitGeneral) {
    for (const auto& p : all_presets()) {
        const auto w = generate(p.spec(), 30);
        for (std::size_t n = 0; n <= 30; ++n) EXPECT_EQ(explicit_general(p.x, p.y, p.init, n), w.at(n)) << p.name();
    }
}

TEST(Catalog, Crosscheck) {
    const auto fib = crosscheck(PresetId::fibonacci, 12);
    EXPECT_TRUE(fib.all_agree());
    ASSERT_EQ(fib.rows.size(), 13U);
    EXPECT_EQ(fib.rows[5].recurrence, RingValue(5));
    EXPECT_EQ(fib.rows[5].explicit_value, RingValue(5));
    EXPECT_EQ(fib.rows[5].word_count, ExactInt(5));
    EXPECT_FALSE(fib.rows[5].closed_form.has_value());

    const auto tiles = crosscheck(PresetId::two_color_tiling, 12);
    EXPECT_TRUE(tiles.all_agree());
    EXPECT_EQ(tiles.rows[4].tiling_count, ExactInt(16));

    for (PresetId id : all_preset_ids) EXPECT_TRUE(crosscheck(id, 24).all_agree()) << to_string(id);
    EXPECT_THROW(crosscheck(PresetId::pell, 1), error);
}

TEST(Catalog, WordModelsCountShiftedTerms) {
    for (const auto& p : all_presets()) {
        if (!p.word_model) continue;
        const auto a = generate(p.spec(), 11);
        for (std::size_t n = 0; n <= 10; ++n) {
            EXPECT_EQ(ExactInt(oracle::count_by_scan(*p.word_model, n)), a.at(n + 1).as_integer()) << p.name() << " " << n;
        }
    }
}

TEST(Catalog, BindingsHold) {
    const auto bindings = identity_bindings();
    EXPECT_GE(bindings.size(), 15U);
    for (const auto& b : bindings) {
        const auto results = b.run(std::min<std::int64_t>(b.default_limit, 8));
        ASSERT_FALSE(results.empty()) << b.name;
        for (const auto& r : results) {
            EXPECT_TRUE(r.report.holds) << b.name;
            EXPECT_EQ(r.named_lhs, r.named_rhs) << b.name;
        }
    }
}

TEST(Catalog, JacobsthalCassiniValues) {
    const auto outcomes = run_bindings("jacobsthal_cassini");
    ASSERT_EQ(outcomes.size(), 61U);
    ExactInt expected = 1;
    for (const auto& o : outcomes) {
        EXPECT_TRUE(o.ok());
        EXPECT_EQ(o.named_rhs, RingValue(expected));
        expected *= -2;
    }
}

TEST(Catalog, ChebyshevTCassiniIsOneMinusZSquared) {
    for (const auto& o : run_bindings("chebyshev_t_cassini")) {
        EXPECT_TRUE(o.ok());
        EXPECT_EQ(o.named_lhs, RingValue(IntPoly({1, 0, -1})));
    }
}

TEST(Catalog, RunBindingsSelectors) {
    EXPECT_FALSE(run_bindings("mersenne").empty());
    try {
        run_bindings("no_such_thing");
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::unknown_preset);
    }
}
