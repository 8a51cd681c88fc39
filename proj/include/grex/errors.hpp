#pragma once

#include <stdexcept>
#include <string>

namespace grex {

/// Classified failure causes surfaced by the library. The CLI maps every
/// grex::error to exit code 2 (bad input) unless noted otherwise.
enum class errc {
    duplicate_element,
    too_small,
    mismatched_k,
    window_too_small,
    window_too_large,
    element_out_of_range,
    exponent_out_of_range,
    not_cofinite,
    not_common,
    degenerate_k,
    bad_cardinality,
    column_missing,
    not_a_complex,
    parse_error,
};

inline const char* errc_name(errc code) {
    switch (code) {
        case errc::duplicate_element: return "DuplicateElement";
        case errc::too_small: return "TooSmall";
        case errc::mismatched_k: return "MismatchedK";
        case errc::window_too_small: return "WindowTooSmall";
        case errc::window_too_large: return "WindowTooLarge";
        case errc::element_out_of_range: return "ElementOutOfRange";
        case errc::exponent_out_of_range: return "ExponentOutOfRange";
        case errc::not_cofinite: return "NotCofinite";
        case errc::not_common: return "NotCommon";
        case errc::degenerate_k: return "DegenerateK";
        case errc::bad_cardinality: return "BadCardinality";
        case errc::column_missing: return "ColumnMissing";
        case errc::not_a_complex: return "NotAComplex";
        case errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace grex
