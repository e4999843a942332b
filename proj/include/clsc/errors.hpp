#ifndef CLSC_ERRORS_HPP
#define CLSC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace clsc {

/// File or parse failure; mapped to exit code 2 by the CLI.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Optimizer or estimation failure; mapped to exit code 3 by the CLI.
struct EstimationError : std::runtime_error {
    explicit EstimationError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid configuration; mapped to exit code 4 by the CLI.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace clsc

#endif // CLSC_ERRORS_HPP
