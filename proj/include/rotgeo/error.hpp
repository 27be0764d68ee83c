#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rotgeo {

enum class Errc {
    syntax_error,
    unknown_identifier,
    wrong_arity,
    domain_error,
    invalid_radius,
    degenerate_metric,
    not_timelike,
    domain_exit,
    nonfinite_state,
    frame_degenerate,
    meridian_undefined,
    precondition,
    validation,
};

const char* to_string(Errc code) noexcept;

/// Single exception type for the library; `code()` tells callers what went wrong.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    // position is 1-based, only meaningful for parse errors
    Error(Errc code, const std::string& what, std::size_t position)
        : std::runtime_error(what), code_(code), position_(position) {}

    Errc code() const noexcept { return code_; }
    std::size_t position() const noexcept { return position_; }

private:
    Errc code_;
    std::size_t position_ = 0;
};

}  // namespace rotgeo
