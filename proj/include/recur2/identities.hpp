#pragma once

/**
 * @file identities.hpp
 * @brief Exact checkers for 2-determinant identities of second-order recurrences.
 *
 * Notation used throughout: (a) is the (0, 1) solution of
 * t(n+1) = x t(n) + y t(n-1); (b) and (c) are arbitrary solutions of the
 * same recurrence given by their initial pairs. D(i, j) is the determinant
 *
 *   | b(i)  b(j) |
 *   | c(i)  c(j) |
 *
 * Each checker regenerates the sequences it needs, evaluates both sides
 * exactly and records every sequence term it read as a witness. The side
 * formulas are written once against an abstract term source, so a report
 * can be re-evaluated from its own witnesses (see reevaluate()).
 */

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "recur2/error.hpp"
#include "recur2/exact_algebra.hpp"
#include "recur2/recurrence.hpp"

namespace recur2 {

enum class Identity {
    docagne,
    prop8,
    cassini,
    index_reduction,
    reduced_docagne,
    four_param,
    vajda,
    catalan,
};

inline constexpr Identity all_identities[] = {
    Identity::docagne,         Identity::prop8,      Identity::cassini, Identity::index_reduction,
    Identity::reduced_docagne, Identity::four_param, Identity::vajda,   Identity::catalan,
};

constexpr std::string_view to_string(Identity id) noexcept {
    switch (id) {
        case Identity::docagne: return "docagne";
        case Identity::prop8: return "prop8";
        case Identity::cassini: return "cassini";
        case Identity::index_reduction: return "index-reduction";
        case Identity::reduced_docagne: return "reduced-docagne";
        case Identity::four_param: return "four-param";
        case Identity::vajda: return "vajda";
        case Identity::catalan: return "catalan";
    }
    return "unknown";
}

inline std::optional<Identity> identity_from_string(std::string_view name) {
    for (Identity id : all_identities) {
        if (to_string(id) == name) return id;
    }
    return std::nullopt;
}

struct Det2 {
    RingValue a11, a12, a21, a22;

    RingValue value() const { return a11 * a22 - a12 * a21; }
};

struct IdentityReport {
    Identity identity = Identity::docagne;
    std::map<std::string, std::int64_t> params;
    /// Recurrence coefficients entering the right side: "y", or "v_j" for prop8.
    std::map<std::string, RingValue> coefficients;
    RingValue lhs;
    RingValue rhs;
    bool holds = false;
    /// Every sequence term read, keyed "b_3", "c_0", "a_5".
    std::map<std::string, RingValue> witnesses;
};

/// Which v-indices multiply the right side of the variable-coefficient identity.
/// `shifted` is the product v(0)..v(k-1), consistent with t(n+1) = u(n)t(n) + v(n-1)t(n-1).
/// `literal` is v(1)..v(k); it is kept to demonstrate that it is wrong.
enum class VProduct { shifted, literal };

namespace detail {

inline std::string term_key(char seq, std::int64_t i) { return std::string(1, seq) + "_" + std::to_string(i); }

/// Reads terms from generated windows and records them.
class WindowSource {
public:
    WindowSource(IdentityReport& report, const SequenceWindow* b, const SequenceWindow* c, const SequenceWindow* a)
        : report_(report), b_(b), c_(c), a_(a) {}

    RingValue b(std::int64_t i) { return read('b', b_, i); }
    RingValue c(std::int64_t i) { return read('c', c_, i); }
    RingValue a(std::int64_t i) { return read('a', a_, i); }

    RingValue coeff(const std::string& name) const { return report_.coefficients.at(name); }

private:
    RingValue read(char seq, const SequenceWindow* w, std::int64_t i) {
        const RingValue& v = w->at(static_cast<std::size_t>(i));
        report_.witnesses.insert_or_assign(term_key(seq, i), v);
        return v;
    }

    IdentityReport& report_;
    const SequenceWindow* b_;
    const SequenceWindow* c_;
    const SequenceWindow* a_;
};

/// Reads terms back from a report's witness map.
class WitnessSource {
public:
    explicit WitnessSource(const IdentityReport& report) : report_(report) {}

    RingValue b(std::int64_t i) const { return read('b', i); }
    RingValue c(std::int64_t i) const { return read('c', i); }
    RingValue a(std::int64_t i) const { return read('a', i); }
    RingValue coeff(const std::string& name) const { return report_.coefficients.at(name); }

private:
    RingValue read(char seq, std::int64_t i) const {
        auto it = report_.witnesses.find(term_key(seq, i));
        if (it == report_.witnesses.end()) {
            throw error(errc::index_constraint, "report has no witness " + term_key(seq, i));
        }
        return it->second;
    }

    const IdentityReport& report_;
};

template <class Source>
RingValue det_bc(Source& s, std::int64_t i, std::int64_t j) {
    return Det2{s.b(i), s.b(j), s.c(i), s.c(j)}.value();
}

template <class Source>
RingValue neg_y_pow(Source& s, std::int64_t e) {
    return pow(-s.coeff("y"), static_cast<std::uint64_t>(e));
}

/// The side formulas. Index preconditions are validated by the callers.
template <class Source>
std::pair<RingValue, RingValue> sides(Identity id, const std::map<std::string, std::int64_t>& p, Source& s) {
    auto P = [&](const char* name) { return p.at(name); };
    switch (id) {
        case Identity::docagne: {
            const auto k = P("k"), m = P("m");
            RingValue lhs = det_bc(s, k, k + m);
            return {lhs, neg_y_pow(s, k) * s.a(m) * det_bc(s, 0, 1)};
        }
        case Identity::prop8: {
            const auto k = P("k"), n = P("n"), start = P("v_start");
            RingValue lhs = det_bc(s, k, n + 2);
            RingValue factor = one_like(s.b(0));
            if (k % 2 == 1) factor = -factor;
            for (std::int64_t j = start; j < start + k; ++j) factor = factor * s.coeff("v_" + std::to_string(j));
            return {lhs, factor * s.a(n - k + 2) * det_bc(s, 0, 1)};
        }
        case Identity::cassini: {
            const auto k = P("k");
            RingValue lhs = det_bc(s, k, k + 1);
            return {lhs, neg_y_pow(s, k) * det_bc(s, 0, 1)};
        }
        case Identity::index_reduction: {
            const auto k = P("k"), m = P("m"), q = P("p");
            RingValue lhs = det_bc(s, k, k + m);
            return {lhs, neg_y_pow(s, q) * det_bc(s, k - q, k - q + m)};
        }
        case Identity::reduced_docagne: {
            const auto m = P("m");
            RingValue lhs = s.a(m) * det_bc(s, 0, 1);
            return {lhs, det_bc(s, 0, m)};
        }
        case Identity::four_param: {
            const auto k = P("k"), m = P("m"), pp = P("p"), q = P("q");
            RingValue lhs = Det2{s.b(k + pp), s.b(m + pp), s.a(k + q), s.a(m + q)}.value();
            return {lhs, neg_y_pow(s, k + q) * s.a(m - k) * s.b(pp - q)};
        }
        case Identity::vajda: {
            const auto k = P("k"), m = P("m"), pp = P("p");
            RingValue lhs = Det2{s.b(k + pp), s.b(k + m + pp), s.a(k), s.a(k + m)}.value();
            return {lhs, neg_y_pow(s, k) * s.a(m) * s.b(pp)};
        }
        case Identity::catalan: {
            const auto n = P("n"), r = P("r");
            RingValue lhs = Det2{s.a(n), s.a(n + r), s.a(n - r), s.a(n)}.value();
            RingValue ar = s.a(r);
            return {lhs, neg_y_pow(s, n - r) * ar * ar};
        }
    }
    throw error(errc::index_constraint, "unknown identity");
}

inline void require_index(bool ok, const std::string& what) {
    if (!ok) throw error(errc::index_constraint, what);
}

inline std::size_t as_size(std::int64_t i) { return static_cast<std::size_t>(i); }

inline IdentityReport run(Identity id, std::map<std::string, std::int64_t> params,
                          std::map<std::string, RingValue> coefficients, const SequenceWindow* b,
                          const SequenceWindow* c, const SequenceWindow* a) {
    IdentityReport report;
    report.identity = id;
    report.params = std::move(params);
    report.coefficients = std::move(coefficients);
    WindowSource source(report, b, c, a);
    auto [lhs, rhs] = sides(id, report.params, source);
    report.lhs = std::move(lhs);
    report.rhs = std::move(rhs);
    report.holds = report.lhs == report.rhs;
    return report;
}

}  // namespace detail

/// Recomputes both sides from the report's own witnesses and coefficients.
inline IdentityReport reevaluate(IdentityReport report) {
    detail::WitnessSource source(report);
    auto [lhs, rhs] = detail::sides(report.identity, report.params, source);
    report.lhs = std::move(lhs);
    report.rhs = std::move(rhs);
    report.holds = report.lhs == report.rhs;
    return report;
}

/// D(k, k+m) = (-y)^k a(m) D(0, 1)
inline IdentityReport check_docagne_general(const RingValue& x, const RingValue& y, const InitialPair& b_init,
                                            const InitialPair& c_init, std::int64_t k, std::int64_t m) {
    detail::require_index(k >= 0 && m >= 0, "d'Ocagne requires k >= 0 and m >= 0");
    const RecurrenceSpec spec(x, y, b_init);
    const auto top = std::max<std::size_t>(detail::as_size(k + m), 1);
    const auto b = generate(spec, top);
    const auto c = generate(spec.with_init(c_init), top);
    const auto a = generate(RecurrenceSpec(x, y), top);
    return detail::run(Identity::docagne, {{"k", k}, {"m", m}}, {{"y", y}}, &b, &c, &a);
}

/// D(k, n+2) = (-1)^k (v(0)...v(k-1)) s(n-k+2) D(0, 1), where s = derived_shifted(coeffs, k).
/// The initial pair stored in `coeffs` is ignored.
inline IdentityReport check_prop8(const VarCoeffSpec& coeffs, const InitialPair& b_init, const InitialPair& c_init,
                                  std::int64_t k, std::int64_t n, VProduct convention = VProduct::shifted) {
    detail::require_index(n >= 0 && k >= 0 && k <= n + 2, "prop8 requires 0 <= k <= n + 2 and n >= 0");
    const auto top = detail::as_size(n + 2);
    const auto b = generate_var(coeffs.with_init(b_init), top);
    const auto c = generate_var(coeffs.with_init(c_init), top);
    const auto a = derived_shifted(coeffs.with_init(b_init), detail::as_size(k), detail::as_size(n - k + 3));

    const std::int64_t start = convention == VProduct::shifted ? 0 : 1;
    std::map<std::string, RingValue> coefficients;
    for (std::int64_t j = start; j < start + k; ++j) {
        coefficients.emplace("v_" + std::to_string(j), detail::coefficient(coeffs.v, detail::as_size(j), "v"));
    }
    return detail::run(Identity::prop8, {{"k", k}, {"n", n}, {"v_start", start}}, std::move(coefficients), &b, &c,
                       &a);
}

/// D(k, k+1) = (-y)^k D(0, 1)
inline IdentityReport check_cassini(const RingValue& x, const RingValue& y, const InitialPair& b_init,
                                    const InitialPair& c_init, std::int64_t k) {
    detail::require_index(k >= 0, "Cassini requires k >= 0");
    const RecurrenceSpec spec(x, y, b_init);
    const auto b = generate(spec, detail::as_size(k + 1));
    const auto c = generate(spec.with_init(c_init), detail::as_size(k + 1));
    return detail::run(Identity::cassini, {{"k", k}}, {{"y", y}}, &b, &c, nullptr);
}

/// D(k, k+m) = (-y)^p D(k-p, k-p+m)
inline IdentityReport check_index_reduction(const RingValue& x, const RingValue& y, const InitialPair& b_init,
                                            const InitialPair& c_init, std::int64_t k, std::int64_t m,
                                            std::int64_t p) {
    detail::require_index(m >= 0 && p >= 0 && k >= p, "index reduction requires k >= p >= 0 and m >= 0");
    const RecurrenceSpec spec(x, y, b_init);
    const auto top = std::max<std::size_t>(detail::as_size(k + m), 1);
    const auto b = generate(spec, top);
    const auto c = generate(spec.with_init(c_init), top);
    return detail::run(Identity::index_reduction, {{"k", k}, {"m", m}, {"p", p}}, {{"y", y}}, &b, &c, nullptr);
}

/// a(m) D(0, 1) = D(0, m)
inline IdentityReport check_reduced_docagne(const RingValue& x, const RingValue& y, const InitialPair& b_init,
                                            const InitialPair& c_init, std::int64_t m) {
    detail::require_index(m >= 0, "reduced d'Ocagne requires m >= 0");
    const RecurrenceSpec spec(x, y, b_init);
    const auto top = std::max<std::size_t>(detail::as_size(m), 1);
    const auto b = generate(spec, top);
    const auto c = generate(spec.with_init(c_init), top);
    const auto a = generate(RecurrenceSpec(x, y), top);
    return detail::run(Identity::reduced_docagne, {{"m", m}}, {{"y", y}}, &b, &c, &a);
}

/// | b(k+p)  b(m+p) |
/// | a(k+q)  a(m+q) | = (-y)^(k+q) a(m-k) b(p-q)
inline IdentityReport check_four_param(const RingValue& x, const RingValue& y, const InitialPair& b_init,
                                       std::int64_t k, std::int64_t m, std::int64_t p, std::int64_t q) {
    detail::require_index(k >= 0 && m >= k && q >= 0 && p >= q, "four-parameter identity requires m >= k >= 0 and p >= q >= 0");
    const RecurrenceSpec spec(x, y, b_init);
    const auto top = std::max<std::size_t>(detail::as_size(m + std::max(p, q)), 1);
    const auto b = generate(spec, top);
    const auto a = generate(RecurrenceSpec(x, y), top);
    return detail::run(Identity::four_param, {{"k", k}, {"m", m}, {"p", p}, {"q", q}}, {{"y", y}}, &b, nullptr, &a);
}

/// | b(k+p)  b(k+m+p) |
/// | a(k)    a(k+m)   | = (-y)^k a(m) b(p)
inline IdentityReport check_vajda(const RingValue& x, const RingValue& y, const InitialPair& b_init, std::int64_t k,
                                  std::int64_t m, std::int64_t p) {
    detail::require_index(k >= 0 && m >= 0 && p >= 0, "Vajda requires k, m, p >= 0");
    const RecurrenceSpec spec(x, y, b_init);
    const auto top = std::max<std::size_t>(detail::as_size(k + m + p), 1);
    const auto b = generate(spec, top);
    const auto a = generate(RecurrenceSpec(x, y), top);
    return detail::run(Identity::vajda, {{"k", k}, {"m", m}, {"p", p}}, {{"y", y}}, &b, nullptr, &a);
}

/// a(n)^2 - a(n-r) a(n+r) = (-y)^(n-r) a(r)^2
inline IdentityReport check_catalan(const RingValue& x, const RingValue& y, std::int64_t n, std::int64_t r) {
    detail::require_index(r >= 0 && n >= r, "Catalan requires n >= r >= 0");
    const auto a = generate(RecurrenceSpec(x, y), std::max<std::size_t>(detail::as_size(n + r), 1));
    return detail::run(Identity::catalan, {{"n", n}, {"r", r}}, {{"y", y}}, nullptr, nullptr, &a);
}

namespace detail {

inline ExactInt exact_quotient(const ExactInt& num, const ExactInt& den) {
    ExactInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (!r.is_zero()) throw error(errc::inexact_division, num.str() + " is not divisible by " + den.str());
    return q;
}

/// Polynomial long division over the integers; throws InexactDivision on a nonzero remainder.
inline IntPoly exact_quotient(const IntPoly& num, const IntPoly& den) {
    const std::size_t dd = *den.degree();
    const ExactInt& lead = den.coefficients().back();
    std::vector<ExactInt> rem = num.coefficients();
    if (rem.size() < dd + 1) {
        if (!num.is_zero()) throw error(errc::inexact_division, num.to_string() + " is not divisible by " + den.to_string());
        return IntPoly({}, num.variable());
    }
    std::vector<ExactInt> quot(rem.size() - dd);
    for (std::size_t i = quot.size(); i-- > 0;) {
        quot[i] = exact_quotient(rem[i + dd], lead);
        for (std::size_t j = 0; j <= dd; ++j) rem[i + j] -= quot[i] * den.coefficients()[j];
    }
    for (const auto& r : rem) {
        if (!r.is_zero()) throw error(errc::inexact_division, num.to_string() + " is not divisible by " + den.to_string());
    }
    return IntPoly(std::move(quot), num.variable());
}

inline RingValue exact_quotient(const RingValue& num, const RingValue& den) {
    if (num.tag() != den.tag()) throw error(errc::tag_mismatch, "quotient operands differ in ring");
    if (num.is_integer()) return exact_quotient(num.as_integer(), den.as_integer());
    return exact_quotient(num.as_poly(), den.as_poly());
}

}  // namespace detail

/**
 * Recovers a(m) from two solution windows (both starting at index 0):
 *
 *   a(m) = D(k, k+m) / ((-y)^k D(0, 1))
 *
 * The division must be exact; a remainder means the windows are not solutions
 * of the same recurrence. `x` only fixes the ring.
 */
inline RingValue recover_a(const RingValue& x, const RingValue& y, const SequenceWindow& b, const SequenceWindow& c,
                           std::int64_t k, std::int64_t m) {
    detail::require_index(k >= 0 && m >= 0, "recover_a requires k, m >= 0");
    const RingValue probe[] = {x, y, b.at(0), c.at(0)};
    detail::require_same_tag(probe, "recover_a inputs");
    if (y.is_zero()) throw error(errc::degenerate_coefficient, "y = 0");
    const auto at = [](const SequenceWindow& w, std::int64_t i) -> const RingValue& {
        if (w.lo != 0) throw error(errc::index_constraint, "windows must start at index 0");
        return w.at(static_cast<std::size_t>(i));
    };
    const RingValue initial = Det2{at(b, 0), at(b, 1), at(c, 0), at(c, 1)}.value();
    if (initial.is_zero()) throw error(errc::singular_initial_pair, "b(0) c(1) - b(1) c(0) = 0");
    const RingValue numerator = Det2{at(b, k), at(b, k + m), at(c, k), at(c, k + m)}.value();
    const RingValue denominator = pow(-y, static_cast<std::uint64_t>(k)) * initial;
    return detail::exact_quotient(numerator, denominator);
}

}  // namespace recur2
