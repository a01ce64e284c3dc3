#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace recur2 {

enum class errc {
    tag_mismatch,
    degenerate_coefficient,
    insufficient_coefficients,
    index_constraint,
    singular_initial_pair,
    inexact_division,
    parse_error,
    letter_out_of_range,
    missing_alphabet,
    cap_exceeded,
    unsupported_params,
    unknown_preset,
};

constexpr std::string_view to_string(errc code) noexcept {
    switch (code) {
        case errc::tag_mismatch: return "TagMismatch";
        case errc::degenerate_coefficient: return "DegenerateCoefficient";
        case errc::insufficient_coefficients: return "InsufficientCoefficients";
        case errc::index_constraint: return "IndexConstraint";
        case errc::singular_initial_pair: return "SingularInitialPair";
        case errc::inexact_division: return "InexactDivision";
        case errc::parse_error: return "ParseError";
        case errc::letter_out_of_range: return "LetterOutOfRange";
        case errc::missing_alphabet: return "MissingAlphabet";
        case errc::cap_exceeded: return "CapExceeded";
        case errc::unsupported_params: return "UnsupportedParams";
        case errc::unknown_preset: return "UnknownPreset";
    }
    return "Unknown";
}

/// Every contract violation in the library is reported through this type.
/// `position()` is set only for DSL parse failures (0-based offset into the input).
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what, std::optional<std::size_t> position = std::nullopt)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), position_(position) {}

    errc code() const noexcept { return code_; }
    std::optional<std::size_t> position() const noexcept { return position_; }

private:
    errc code_;
    std::optional<std::size_t> position_;
};

}  // namespace recur2
