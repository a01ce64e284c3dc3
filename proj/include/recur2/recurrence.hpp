#pragma once

/**
 * @file recurrence.hpp
 * @brief Second-order linear homogeneous recurrences over a RingValue ring.
 *
 *   t(n+1) = x * t(n) + y * t(n-1),   n >= 1
 *
 * The canonical solution starts from (0, 1). The variable-coefficient form
 *
 *   t(n+1) = u(n) * t(n) + v(n-1) * t(n-1)
 *
 * takes finite windows of u and v; every index is non-negative.
 */

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "recur2/error.hpp"
#include "recur2/exact_algebra.hpp"

namespace recur2 {

using InitialPair = std::pair<RingValue, RingValue>;

/// (0, 1) in the ring of `like`.
inline InitialPair canonical_init(const RingValue& like) { return {zero_like(like), one_like(like)}; }

namespace detail {

inline void require_same_tag(std::span<const RingValue> values, const char* what) {
    for (const auto& v : values) {
        if (v.tag() != values.front().tag()) {
            throw error(errc::tag_mismatch, std::string(what) + " mixes integer and polynomial values");
        }
    }
}

}  // namespace detail

class RecurrenceSpec {
public:
    /// Canonical initial pair (0, 1).
    RecurrenceSpec(RingValue x, RingValue y) : RecurrenceSpec(x, y, canonical_init(x)) {}

    RecurrenceSpec(RingValue x, RingValue y, InitialPair init)
        : x_(std::move(x)), y_(std::move(y)), init_(std::move(init)) {
        const RingValue all[] = {x_, y_, init_.first, init_.second};
        detail::require_same_tag(all, "recurrence spec");
        if (y_.is_zero()) throw error(errc::degenerate_coefficient, "y = 0 reduces the recurrence to first order");
    }

    const RingValue& x() const noexcept { return x_; }
    const RingValue& y() const noexcept { return y_; }
    const InitialPair& init() const noexcept { return init_; }
    RingTag tag() const noexcept { return x_.tag(); }

    RecurrenceSpec with_init(InitialPair init) const { return {x_, y_, std::move(init)}; }

private:
    RingValue x_;
    RingValue y_;
    InitialPair init_;
};

/// Consecutive terms t(lo), t(lo+1), ...
struct SequenceWindow {
    std::size_t lo = 0;
    std::vector<RingValue> values;

    std::size_t hi() const noexcept { return lo + values.size(); }  // one past the last index
    bool contains(std::size_t n) const noexcept { return n >= lo && n < hi(); }

    const RingValue& at(std::size_t n) const {
        if (!contains(n)) {
            throw error(errc::index_constraint, "index " + std::to_string(n) + " outside window [" +
                                                    std::to_string(lo) + ", " + std::to_string(hi()) + ")");
        }
        return values[n - lo];
    }
};

/// Terms from..to inclusive.
inline SequenceWindow generate(const RecurrenceSpec& spec, std::size_t from, std::size_t to) {
    if (to < from) throw error(errc::index_constraint, "empty range: from > to");
    SequenceWindow w{from, {}};
    w.values.reserve(to - from + 1);
    RingValue prev = spec.init().first;
    RingValue cur = spec.init().second;
    for (std::size_t n = 0; n <= to; ++n) {
        if (n >= from) w.values.push_back(prev);
        RingValue next = spec.x() * cur + spec.y() * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return w;
}

inline SequenceWindow generate(const RecurrenceSpec& spec, std::size_t n_max) {
    if (n_max < 1) throw error(errc::index_constraint, "n_max must be at least 1");
    return generate(spec, 0, n_max);
}

/**
 * Closed sum for the (0, 1) solution:
 *
 *   a(n) = sum_{k=0}^{floor((n-1)/2)} C(n-1-k, k) x^(n-2k-1) y^k
 *
 * a(0) is the empty sum, 0.
 */
inline RingValue explicit_term(const RingValue& x, const RingValue& y, std::size_t n) {
    const RecurrenceSpec spec(x, y);  // validates tags and y != 0
    RingValue sum = zero_like(x);
    if (n == 0) return sum;
    const auto top = static_cast<std::int64_t>(n - 1);
    for (std::int64_t k = 0; 2 * k <= top; ++k) {
        RingValue term = constant_like(x, binomial(top - k, k));
        term = term * pow(x, static_cast<std::uint64_t>(top - 2 * k)) * pow(y, static_cast<std::uint64_t>(k));
        sum = sum + term;
    }
    return sum;
}

/// Finite coefficient windows u(0..), v(0..) plus an initial pair.
struct VarCoeffSpec {
    std::vector<RingValue> u;
    std::vector<RingValue> v;
    InitialPair init;

    VarCoeffSpec with_init(InitialPair i) const { return {u, v, std::move(i)}; }

    /// u(i) = x, v(i) = y for i < len.
    static VarCoeffSpec constant(const RingValue& x, const RingValue& y, std::size_t len, InitialPair init) {
        return {std::vector<RingValue>(len, x), std::vector<RingValue>(len, y), std::move(init)};
    }
};

namespace detail {

inline const RingValue& coefficient(const std::vector<RingValue>& window, std::size_t i, const char* name) {
    if (i >= window.size()) {
        throw error(errc::insufficient_coefficients,
                    std::string(name) + "[" + std::to_string(i) + "] required but the window has " +
                        std::to_string(window.size()) + " entries");
    }
    return window[i];
}

inline void validate(const VarCoeffSpec& spec) {
    std::vector<RingValue> all = spec.u;
    all.insert(all.end(), spec.v.begin(), spec.v.end());
    all.push_back(spec.init.first);
    all.push_back(spec.init.second);
    require_same_tag(all, "variable-coefficient spec");
}

}  // namespace detail

inline SequenceWindow generate_var(const VarCoeffSpec& spec, std::size_t n_max) {
    detail::validate(spec);
    SequenceWindow w{0, {spec.init.first, spec.init.second}};
    for (std::size_t n = 1; n < n_max; ++n) {
        const RingValue& un = detail::coefficient(spec.u, n, "u");
        const RingValue& vn = detail::coefficient(spec.v, n - 1, "v");
        w.values.push_back(un * w.values[n] + vn * w.values[n - 1]);
    }
    w.values.resize(std::max<std::size_t>(n_max + 1, 1));
    return w;
}

/**
 * Auxiliary sequence of the variable-coefficient determinant theorem, shifted by k:
 *
 *   s(0) = 0, s(1) = 1, s(i) = v(k+i-2) s(i-2) + u(k+i-1) s(i-1)   (i >= 2)
 *
 * so s(2) = u(k+1). Returns `len` terms.
 */
inline SequenceWindow derived_shifted(const VarCoeffSpec& spec, std::size_t k, std::size_t len) {
    detail::validate(spec);
    const RingValue& like = spec.init.first;
    SequenceWindow w{0, {}};
    w.values.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        if (i == 0) {
            w.values.push_back(zero_like(like));
        } else if (i == 1) {
            w.values.push_back(one_like(like));
        } else {
            const RingValue& vi = detail::coefficient(spec.v, k + i - 2, "v");
            const RingValue& ui = detail::coefficient(spec.u, k + i - 1, "u");
            w.values.push_back(vi * w.values[i - 2] + ui * w.values[i - 1]);
        }
    }
    return w;
}

}  // namespace recur2
