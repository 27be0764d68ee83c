#include "rotgeo/error.hpp"

namespace rotgeo {

const char* to_string(Errc code) noexcept {
    switch (code) {
        case Errc::syntax_error: return "syntax_error";
        case Errc::unknown_identifier: return "unknown_identifier";
        case Errc::wrong_arity: return "wrong_arity";
        case Errc::domain_error: return "domain_error";
        case Errc::invalid_radius: return "invalid_radius";
        case Errc::degenerate_metric: return "degenerate_metric";
        case Errc::not_timelike: return "not_timelike";
        case Errc::domain_exit: return "domain_exit";
        case Errc::nonfinite_state: return "nonfinite_state";
        case Errc::frame_degenerate: return "frame_degenerate";
        case Errc::meridian_undefined: return "meridian_undefined";
        case Errc::precondition: return "precondition";
        case Errc::validation: return "validation";
    }
    return "unknown";
}

}  // namespace rotgeo
