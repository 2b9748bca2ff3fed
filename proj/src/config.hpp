#pragma once

#include <string>

#include "model.hpp"

namespace ric::config {

// Parsed run configuration: model constants, the initial system state and
// the run controls shared by every command.
struct RunConfig {
    ModelParams params;
    QubitState initial{0.5, Complex{0.0, 0.0}};
    long steps = 100;
    double epsilon = 1e-6;
};

// Sweep request attached by the CLI: vary one parameter over an inclusive
// linear grid.
struct SweepSpec {
    std::string variable;  // one of jzz, tau, beta, jxx, jyy
    double from = 0.0;
    double to = 1.0;
    int points = 2;

    void validate() const;
};

/// Applies one sweep value to a parameter set (beta sets both baths).
ModelParams with_value(const ModelParams& base, const std::string& variable, double value);

/// Parses line-oriented `key = value` text with `#` comments.
///
/// Keys: omega_s, omega_a, jxx, jyy, jzz, beta (or beta1/beta2), tau,
/// p0, c0_re, c0_im, steps, epsilon. Unknown or repeated keys raise
/// ParseError with the line number; missing required keys and constraint
/// violations raise ValidationError naming the constraint.
RunConfig parse_config(const std::string& text);

RunConfig load_config(const std::string& path);

/// Shortest decimal that round-trips a double (17 significant digits).
std::string format_double(double value);

}  // namespace ric::config
