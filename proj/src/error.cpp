#include "accelramsey/error.hpp"

namespace accelramsey {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::domain: return "domain";
        case ErrorKind::pole: return "pole";
        case ErrorKind::divergence: return "divergence";
        case ErrorKind::convergence: return "convergence";
        case ErrorKind::zero_detuning: return "zero-detuning";
        case ErrorKind::negative_radicand: return "negative-radicand";
        case ErrorKind::zero_acceleration: return "zero-acceleration";
        case ErrorKind::degenerate: return "degenerate";
        case ErrorKind::truncation: return "truncation";
        case ErrorKind::invariant: return "invariant";
        case ErrorKind::config: return "config";
        case ErrorKind::io: return "io";
    }
    return "unknown";
}

}  // namespace accelramsey
