#pragma once

#include <stdexcept>
#include <string>

namespace perdel {

// Domain error carrying a stable machine-readable code (e.g. "NotPositiveDefinite").
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)), detail_(detail) {}

    const std::string& code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string code_;
    std::string detail_;
};

// Malformed input files (exit status 2 in the CLI).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace perdel
