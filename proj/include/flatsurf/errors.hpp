#pragma once

#include <stdexcept>
#include <string>

namespace flatsurf {

// Every failure mode of the library, split into input-validation errors
// (reported as exit code 1 by the CLI) and evaluation/runtime errors (exit 2).
enum class Errc {
    // validation
    out_of_range,
    constraint_violated,
    degenerate_generator,
    parse_error,
    // evaluation
    overflow,
    degenerate_point,
    singular_point,
    stencil_hits_singularity,
    // mesh / io
    near_pole,
    grid_too_large,
    empty_mesh,
    unprojected_mesh,
    io_failure,
};

constexpr const char* errc_name(Errc c) {
    switch (c) {
        case Errc::out_of_range: return "out_of_range";
        case Errc::constraint_violated: return "constraint_violated";
        case Errc::degenerate_generator: return "degenerate_generator";
        case Errc::parse_error: return "parse_error";
        case Errc::overflow: return "overflow";
        case Errc::degenerate_point: return "degenerate_point";
        case Errc::singular_point: return "singular_point";
        case Errc::stencil_hits_singularity: return "stencil_hits_singularity";
        case Errc::near_pole: return "near_pole";
        case Errc::grid_too_large: return "grid_too_large";
        case Errc::empty_mesh: return "empty_mesh";
        case Errc::unprojected_mesh: return "unprojected_mesh";
        case Errc::io_failure: return "io_failure";
    }
    return "unknown";
}

constexpr bool is_validation_error(Errc c) {
    return c == Errc::out_of_range || c == Errc::constraint_violated ||
           c == Errc::degenerate_generator || c == Errc::parse_error;
}

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace flatsurf
