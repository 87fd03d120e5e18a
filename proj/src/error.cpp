#include "qpd/error.hpp"

namespace qpd {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ConflictingEntries: return "ConflictingEntries";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::BadArity: return "BadArity";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotInClass: return "NotInClass";
    case ErrorKind::NotInSignClass: return "NotInSignClass";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NonFiniteValue: return "NonFiniteValue";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace qpd
