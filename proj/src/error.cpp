#include "srpk/error.hpp"

namespace srpk {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::no_closure: return "NoClosure";
    case ErrorKind::no_inverse: return "NoInverse";
    case ErrorKind::no_convergence: return "NoConvergence";
    case ErrorKind::shape_mismatch: return "ShapeMismatch";
    case ErrorKind::bad_split: return "BadSplit";
    case ErrorKind::not_triangular: return "NotTriangular";
    case ErrorKind::not_symmetric: return "NotSymmetric";
    case ErrorKind::not_idempotent: return "NotIdempotentSemiring";
    case ErrorKind::band_violation: return "BandViolation";
    case ErrorKind::invalid_interval: return "InvalidInterval";
    case ErrorKind::no_path: return "NoPath";
    case ErrorKind::parse_error: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

void raise(ErrorKind kind, const std::string& detail) { throw Error(kind, detail); }

}  // namespace srpk
