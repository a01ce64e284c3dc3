#pragma once

/**
 * @file exact_algebra.hpp
 * @brief Exact ring values: big integers and dense integer polynomials.
 *
 * Every sequence term in the library is a RingValue. A RingValue is either
 * an ExactInt or an IntPoly; arithmetic never mixes the two. Promotion of an
 * integer to a constant polynomial is explicit (RingValue::promoted).
 */

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "recur2/error.hpp"

namespace recur2 {

using ExactInt = boost::multiprecision::cpp_int;

/// Parses an optionally signed decimal string; anything else is a ParseError.
inline ExactInt parse_exact_int(std::string_view text) {
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
    if (i == text.size()) throw error(errc::parse_error, "expected decimal integer, got '" + std::string(text) + "'", 0);
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] < '0' || text[j] > '9')
            throw error(errc::parse_error, "expected decimal integer, got '" + std::string(text) + "'", j);
    }
    ExactInt value(std::string(text.substr(i)));
    return text[0] == '-' ? ExactInt(-value) : value;
}

inline std::string to_decimal(const ExactInt& v) { return v.str(); }

/**
 * Dense univariate polynomial with ExactInt coefficients, ascending degree.
 *
 * Canonical form: no trailing (highest-degree) zero coefficients; the zero
 * polynomial is the empty list and has no degree. The variable name only
 * affects printing.
 */
class IntPoly {
public:
    IntPoly() = default;

    explicit IntPoly(std::vector<ExactInt> coefficients, std::string variable = "z")
        : coeffs_(std::move(coefficients)), variable_(std::move(variable)) {
        canonicalize();
    }

    static IntPoly constant(const ExactInt& c, std::string variable = "z") {
        return IntPoly({c}, std::move(variable));
    }

    static IntPoly monomial(const ExactInt& c, std::size_t degree, std::string variable = "z") {
        std::vector<ExactInt> coeffs(degree + 1);
        coeffs[degree] = c;
        return IntPoly(std::move(coeffs), std::move(variable));
    }

    /// nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<ExactInt>& coefficients() const noexcept { return coeffs_; }
    const std::string& variable() const noexcept { return variable_; }

    ExactInt coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ExactInt(0); }

    ExactInt evaluate(const ExactInt& t) const {
        ExactInt acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<ExactInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
        return IntPoly(std::move(out), pick_variable(a, b));
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly({}, pick_variable(a, b));
        std::vector<ExactInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return IntPoly(std::move(out), pick_variable(a, b));
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Human form, highest degree first: "4z^2 - 1".
    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t d = coeffs_.size(); d-- > 0;) {
            const ExactInt& c = coeffs_[d];
            if (c.is_zero()) continue;
            ExactInt mag = abs(c);
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? " - " : " + ";
            }
            if (mag != 1 || d == 0) out += mag.str();
            if (d >= 1) out += variable_;
            if (d >= 2) out += "^" + std::to_string(d);
        }
        return out;
    }

private:
    void canonicalize() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    static const std::string& pick_variable(const IntPoly& a, const IntPoly& b) {
        return a.coeffs_.size() >= 2 || b.coeffs_.size() < 2 ? a.variable_ : b.variable_;
    }

    std::vector<ExactInt> coeffs_;
    std::string variable_ = "z";
};

enum class RingTag { integer, polynomial };

constexpr std::string_view to_string(RingTag tag) noexcept {
    return tag == RingTag::integer ? "integer" : "polynomial";
}

/// Tagged exact value. Binary arithmetic requires equal tags and throws
/// TagMismatch otherwise.
class RingValue {
public:
    RingValue() : value_(ExactInt(0)) {}
    RingValue(ExactInt v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    RingValue(IntPoly p) : value_(std::move(p)) {}   // NOLINT(google-explicit-constructor)
    template <std::integral I>
    RingValue(I v) : value_(ExactInt(v)) {}  // NOLINT(google-explicit-constructor)

    RingTag tag() const noexcept { return value_.index() == 0 ? RingTag::integer : RingTag::polynomial; }
    bool is_integer() const noexcept { return tag() == RingTag::integer; }
    bool is_polynomial() const noexcept { return tag() == RingTag::polynomial; }

    const ExactInt& as_integer() const {
        if (auto* v = std::get_if<ExactInt>(&value_)) return *v;
        throw error(errc::tag_mismatch, "expected an integer value, got polynomial " + to_string());
    }

    const IntPoly& as_poly() const {
        if (auto* p = std::get_if<IntPoly>(&value_)) return *p;
        throw error(errc::tag_mismatch, "expected a polynomial value, got integer " + to_string());
    }

    bool is_zero() const {
        return is_integer() ? std::get<ExactInt>(value_).is_zero() : std::get<IntPoly>(value_).is_zero();
    }

    /// Integer -> constant polynomial; polynomials are returned unchanged.
    RingValue promoted(std::string variable = "z") const {
        if (is_polynomial()) return *this;
        return IntPoly::constant(std::get<ExactInt>(value_), std::move(variable));
    }

    /// Polynomial evaluated at t; integers are returned unchanged.
    RingValue evaluated_at(const ExactInt& t) const {
        if (is_integer()) return *this;
        return std::get<IntPoly>(value_).evaluate(t);
    }

    std::string to_string() const {
        return is_integer() ? std::get<ExactInt>(value_).str() : std::get<IntPoly>(value_).to_string();
    }

    friend bool operator==(const RingValue& a, const RingValue& b) { return a.value_ == b.value_; }

    friend std::ostream& operator<<(std::ostream& os, const RingValue& v) { return os << v.to_string(); }

    friend RingValue operator+(const RingValue& a, const RingValue& b) {
        return binary(a, b, [](const auto& l, const auto& r) { return l + r; }, "+");
    }
    friend RingValue operator-(const RingValue& a, const RingValue& b) {
        return binary(a, b, [](const auto& l, const auto& r) { return l - r; }, "-");
    }
    friend RingValue operator*(const RingValue& a, const RingValue& b) {
        return binary(a, b, [](const auto& l, const auto& r) { return l * r; }, "*");
    }
    RingValue operator-() const {
        return std::visit(
            [](const auto& v) -> RingValue {
                using T = std::decay_t<decltype(v)>;
                return T(-v);
            },
            value_);
    }

private:
    template <class Op>
    static RingValue binary(const RingValue& a, const RingValue& b, Op op, const char* symbol) {
        if (a.tag() != b.tag()) {
            throw error(errc::tag_mismatch, std::string("cannot combine ") + std::string(recur2::to_string(a.tag())) +
                                                " " + symbol + " " + std::string(recur2::to_string(b.tag())));
        }
        if (a.is_integer()) return ExactInt(op(std::get<ExactInt>(a.value_), std::get<ExactInt>(b.value_)));
        return IntPoly(op(std::get<IntPoly>(a.value_), std::get<IntPoly>(b.value_)));
    }

    std::variant<ExactInt, IntPoly> value_;
};

inline RingValue add(const RingValue& a, const RingValue& b) { return a + b; }
inline RingValue sub(const RingValue& a, const RingValue& b) { return a - b; }
inline RingValue mul(const RingValue& a, const RingValue& b) { return a * b; }

/// Integer c carried in the same ring as `like` (polynomials keep their variable).
inline RingValue constant_like(const RingValue& like, const ExactInt& c) {
    if (like.is_integer()) return c;
    return IntPoly::constant(c, like.as_poly().variable());
}

inline RingValue zero_like(const RingValue& like) { return constant_like(like, 0); }
inline RingValue one_like(const RingValue& like) { return constant_like(like, 1); }

inline RingValue pow(const RingValue& base, std::uint64_t e) {
    RingValue result = one_like(base);
    RingValue square = base;
    while (e != 0) {
        if (e & 1U) result = result * square;
        e >>= 1U;
        if (e != 0) square = square * square;
    }
    return result;
}

/// C(n, k); zero outside 0 <= k <= n.
inline ExactInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    ExactInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is C(n-k+i, i) after this step
    }
    return r;
}

}  // namespace recur2
