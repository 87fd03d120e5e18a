#ifndef QPD_ERROR_HPP
#define QPD_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace qpd {

enum class ErrorKind {
  ConflictingEntries,
  BadIndex,
  BadArity,
  DimensionMismatch,
  NotInClass,
  NotInSignClass,
  PreconditionViolated,
  NonFiniteValue,
  InvalidConfig,
  UnknownId,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qpd

#endif  // QPD_ERROR_HPP
