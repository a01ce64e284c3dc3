#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "recur2/recurrence.hpp"

using namespace recur2;

namespace {

std::vector<RingValue> ints(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

IntPoly P(std::vector<ExactInt> c) { return IntPoly(std::move(c)); }

VarCoeffSpec sample_spec(InitialPair init) { return {ints({1, 2, 3, 4}), ints({5, 1, 2}), std::move(init)}; }

}  // namespace

TEST(Recurrence, GenerateExamples) {
    EXPECT_EQ(generate(RecurrenceSpec(1, 1), 6).values, ints({0, 1, 1, 2, 3, 5, 8}));
    EXPECT_EQ(generate(RecurrenceSpec(3, -2), 4).values, ints({0, 1, 3, 7, 15}));

    const auto cheb = generate(RecurrenceSpec(P({0, 2}), P({-1})), 3);
    const std::vector<RingValue> expected = {P({}), P({1}), P({0, 2}), P({-1, 0, 4})};
    EXPECT_EQ(cheb.values, expected);
}

TEST(Recurrence, GenerateMatchesPlainIteration) {
    for (long long x = -4; x <= 4; ++x) {
        for (long long y = -4; y <= 4; ++y) {
            if (y == 0) continue;
            const auto ref = oracle::iterate(x, y, 2, -3, 40);
            const auto w = generate(RecurrenceSpec(x, y, {2, -3}), 40);
            for (std::size_t n = 0; n <= 40; ++n) EXPECT_EQ(w.at(n), RingValue(ref[n]));
        }
    }
}

TEST(Recurrence, WindowBounds) {
    const auto w = generate(RecurrenceSpec(1, 1), 5, 9);
    EXPECT_EQ(w.lo, 5U);
    EXPECT_EQ(w.at(5), RingValue(5));
    EXPECT_EQ(w.at(9), RingValue(34));
    try {
        (void)w.at(4);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::index_constraint);
    }
    EXPECT_THROW(generate(RecurrenceSpec(1, 1), 0), error);
}

TEST(Recurrence, DegenerateAndMixedSpecs) {
    try {
        RecurrenceSpec(3, 0);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::degenerate_coefficient);
    }
    try {
        RecurrenceSpec(P({0, 2}), -1);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::tag_mismatch);
    }
    EXPECT_THROW(RecurrenceSpec(P({0, 2}), P({})), error);
}

TEST(Recurrence, Linearity) {
    const RecurrenceSpec s(3, -5);
    const auto b = generate(s.with_init({4, -1}), 30);
    const auto c = generate(s.with_init({-2, 7}), 30);
    const auto sum = generate(s.with_init({4 * 3 + (-2) * 5, -1 * 3 + 7 * 5}), 30);
    for (std::size_t n = 0; n <= 30; ++n) EXPECT_EQ(sum.at(n), RingValue(3) * b.at(n) + RingValue(5) * c.at(n));
}

TEST(Recurrence, ExplicitTermExamples) {
    EXPECT_EQ(explicit_term(1, 1, 5), RingValue(5));
    EXPECT_EQ(explicit_term(3, -2, 4), RingValue(15));
    EXPECT_EQ(explicit_term(7, -9, 1), RingValue(1));
    EXPECT_EQ(explicit_term(7, -9, 0), RingValue(0));
    EXPECT_EQ(explicit_term(P({0, 1}), P({1}), 1), RingValue(P({1})));
}

TEST(Recurrence, ExplicitTermMatchesIteration) {
    for (long long x = -5; x <= 5; ++x) {
        for (long long y = -5; y <= 5; ++y) {
            if (y == 0) continue;
            const auto ref = oracle::iterate(x, y, 0, 1, 40);
            for (std::size_t n = 0; n <= 40; ++n) EXPECT_EQ(explicit_term(x, y, n), RingValue(ref[n]));
        }
    }
}

TEST(Recurrence, PolynomialWindowCommutesWithEvaluation) {
    const RecurrenceSpec chebyshev(P({0, 2}), P({-1}));
    const RecurrenceSpec fib_poly(P({0, 1}), P({1}));
    for (const auto* spec : {&chebyshev, &fib_poly}) {
        const auto w = generate(*spec, 20);
        for (int t = -3; t <= 3; ++t) {
            const ExactInt at(t);
            const auto x = spec->x().evaluated_at(at).as_integer();
            const auto y = spec->y().evaluated_at(at).as_integer();
            const auto ref = oracle::iterate(static_cast<long long>(x), static_cast<long long>(y), 0, 1, 20);
            for (std::size_t n = 0; n <= 20; ++n) {
                EXPECT_EQ(w.at(n).evaluated_at(at), RingValue(ref[n]));
                EXPECT_EQ(explicit_term(spec->x(), spec->y(), n).evaluated_at(at), RingValue(ref[n]));
            }
        }
    }
}

TEST(Recurrence, GenerateVarExamples) {
    EXPECT_EQ(generate_var(sample_spec({1, 0}), 4).values, ints({1, 0, 5, 15, 70}));
    EXPECT_EQ(generate_var(sample_spec({0, 1}), 4).values, ints({0, 1, 2, 7, 32}));
}

TEST(Recurrence, GenerateVarNeedsCoefficients) {
    try {
        generate_var(sample_spec({0, 1}), 5);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::insufficient_coefficients);
    }
}

TEST(Recurrence, GenerateVarConstantCoefficients) {
    const auto w = generate_var(VarCoeffSpec::constant(2, 3, 30, {1, 1}), 25);
    const auto ref = oracle::iterate(2, 3, 1, 1, 25);
    for (std::size_t n = 0; n <= 25; ++n) EXPECT_EQ(w.at(n), RingValue(ref[n]));
}

TEST(Recurrence, DerivedShiftedExamples) {
    EXPECT_EQ(derived_shifted(sample_spec({0, 1}), 1, 4).values, ints({0, 1, 3, 14}));
    EXPECT_EQ(derived_shifted(sample_spec({0, 1}), 3, 2).values, ints({0, 1}));
    EXPECT_THROW(derived_shifted(sample_spec({0, 1}), 2, 4), error);

    const auto constant = VarCoeffSpec::constant(-3, 7, 40, {0, 1});
    const auto a = generate(RecurrenceSpec(-3, 7), 20);
    for (std::size_t k = 0; k <= 10; ++k) {
        const auto s = derived_shifted(constant, k, 21);
        for (std::size_t i = 0; i <= 20; ++i) EXPECT_EQ(s.at(i), a.at(i));
    }
}
