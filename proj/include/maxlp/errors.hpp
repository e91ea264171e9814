#pragma once

#include <stdexcept>
#include <string>

namespace maxlp {

/// Bad user input or configuration: malformed files, non-power-of-two grids,
/// unknown flags, corrupted calibration fixtures. CLI exit code 2.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// Request outside the admissible range of the given grid: radius caps,
/// band indices past the Nyquist guard, lacunary N too large, dilation that
/// would leave a valid grid. CLI exit code 3.
struct admissibility_error : std::runtime_error {
    explicit admissibility_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace maxlp
