#ifndef QPD_INEQUALITY_SUITE_HPP
#define QPD_INEQUALITY_SUITE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpd/numeric_oracle.hpp"
#include "qpd/tensor.hpp"

namespace qpd {

// Ternary quartic inequalities of the form
//   L^4 + k (x1^2 x2^2 + x1^2 x3^2 + x2^2 x3^2) >= 8 (cubic terms) [+ 24 x1 x2 x3^2]
// that follow from the sign-class classification at b = 11/6, 2, 5/2, 8/3.
enum class InequalityKind { C32_i, C32_ii, C33_i, C33_ii, C33_iii, C33_iv };

/// Swaps applied to the cubic monomials: swap12 exchanges x1^3 x2 and
/// x1 x2^3, swap13 x1^3 x3 and x1 x3^3, swap23 x2 x3^3 and x2^3 x3.
struct Exchange {
  bool swap12 = false;
  bool swap13 = false;
  bool swap23 = false;

  bool none() const { return !swap12 && !swap13 && !swap23; }
  bool all() const { return swap12 && swap13 && swap23; }
  bool operator==(const Exchange&) const = default;
};

struct InequalityId {
  InequalityKind kind = InequalityKind::C32_i;
  Exchange exchange;

  bool operator==(const InequalityId&) const = default;
};

/// "C32_i", "C33_ii+swap23", "C32_ii+swap12+swap13+swap23", ...
std::string to_string(const InequalityId& id);

/// Inverse of to_string; throws UnknownId.
InequalityId parse_inequality_id(std::string_view text);

/// C32_* admit no swap or all three at once; C33_* admit any single swap.
/// Throws UnknownId otherwise.
void validate(const InequalityId& id);

/// Strict everywhere except the origin (all but C32_i).
bool is_strict(InequalityKind kind);

/// Every admissible (kind, exchange) combination.
std::vector<InequalityId> all_inequality_variants();

/// LHS - RHS at x. Throws UnknownId for inadmissible exchanges.
template <class T>
T residual(const InequalityId& id, const Point<T, 3>& x);

/// The residual as a symmetric tensor, by exact polynomial expansion.
TernaryQuartic residual_tensor(const InequalityId& id);

struct Violation {
  Point3 point;
  Rational residual;
  std::string reason;
};

struct InequalityReport {
  InequalityId id;
  int random_points = 0;
  int structured_points = 0;
  int equality_points = 0;  ///< points (t, t, t) checked for C32_i
  std::optional<Violation> violation;
  double oracle_min = 0.0;
  NumericVerdict oracle_verdict = NumericVerdict::Inconclusive;
  std::optional<Rational> oracle_confirmed;
  bool oracle_ok = false;
  std::string oracle_detail;

  bool ok() const { return !violation && oracle_ok; }
};

/// Residual sign checks at `samples` random rational points (numerators in
/// [-100, 100], denominators in [1, 100]) and at structured points, plus an
/// oracle run on residual_tensor(id). For C32_i the residual must vanish
/// exactly on x1 = x2 = x3 and be positive elsewhere; for the others it
/// must be positive at every nonzero point.
InequalityReport check_inequality(const InequalityId& id, int samples, std::uint64_t seed,
                                  const OracleConfig& cfg = {});

}  // namespace qpd

#endif  // QPD_INEQUALITY_SUITE_HPP
