#pragma once

#include <stdexcept>
#include <string>

namespace tbcurv {

/// Evaluation of a rational function at a point where its denominator
/// vanishes, or an operation whose domain contains such a point.
struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Malformed metric/scalar expression text.
struct parse_error : std::runtime_error {
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

/// Chart point outside the coordinate domain of a conformal chart.
struct chart_domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Finite-difference step too large for the remaining chart margin.
struct step_too_large_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace tbcurv
