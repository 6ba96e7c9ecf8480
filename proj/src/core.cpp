#include "lpc/core.hpp"

namespace lpc {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::NumericFailure: return "numeric-failure";
    case ErrorKind::DegenerateSource: return "degenerate-source";
    case ErrorKind::DegenerateField: return "degenerate-field";
    case ErrorKind::Unsupported: return "unsupported";
    }
    return "unknown";
}

}  // namespace lpc
