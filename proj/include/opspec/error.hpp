#pragma once

#include <stdexcept>
#include <string>

namespace opspec {

/// Failure raised by every module. `code()` is a stable machine-readable tag
/// such as "degenerate-arrangement" or "index-too-large".
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

}  // namespace opspec
