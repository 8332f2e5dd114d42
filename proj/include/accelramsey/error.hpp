#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace accelramsey {

enum class ErrorKind {
    domain,
    pole,
    divergence,
    convergence,
    zero_detuning,
    negative_radicand,
    zero_acceleration,
    degenerate,
    truncation,
    invariant,
    config,
    io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` discriminates the failure.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + " error: " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace accelramsey
