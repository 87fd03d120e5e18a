#ifndef QPD_BINARY_CLASSIFIER_HPP
#define QPD_BINARY_CLASSIFIER_HPP

#include <optional>
#include <string>

#include "qpd/numeric_oracle.hpp"
#include "qpd/tensor.hpp"
#include "qpd/verdict.hpp"

namespace qpd {

/// Classical invariants of the binary quartic
///   t1111 x1^4 + 4 t1112 x1^3 x2 + 6 t1122 x1^2 x2^2 + 4 t1222 x1 x2^3 + t2222 x2^4.
/// The discriminant of the expanded polynomial is 256 * disc, so they share a sign.
struct InvariantPair {
  Rational I;
  Rational J;
  Rational disc;  ///< I^3 - 27 J^2
};

InvariantPair invariants_ij(const BinaryQuartic& t);

struct Verdict {
  Definiteness definiteness = Definiteness::UndeterminedByTheory;
  /// Exact certificate: Tx^4 < 0 when not PSD, Tx^4 = 0 (x != 0) when PSD
  /// but not PD.
  std::optional<Point2> witness;
  std::string branch;
};

/// The two analytic conditions evaluated exactly, positive diagonals
/// required. Branch labels: "I-disc0", "I-branch-i", "I-branch-ii",
/// "II-branch-i", "II-branch-ii"; empty when the condition fails.
struct DefinitenessConditions {
  bool definite = false;      ///< condition (I)
  bool semidefinite = false;  ///< condition (II)
  std::string definite_branch;
  std::string semidefinite_branch;
};

/// Throws PreconditionViolated unless t1111 > 0 and t2222 > 0.
DefinitenessConditions definiteness_conditions(const BinaryQuartic& t);

/// Full classification. With positive diagonals the verdict comes from
/// definiteness_conditions; a negative diagonal is refuted by e1 or e2; a
/// zero diagonal is handed to the oracle. Witnesses for negative verdicts
/// are searched with the oracle and confirmed exactly.
Verdict classify_binary(const BinaryQuartic& t, const OracleConfig& cfg = {});

/// Fast path for |t_ijkl| = 1 with t1111 = t2222 = 1: PSD iff t1122 = 1,
/// PD iff additionally t1112 t1222 = -1. Throws NotInSignClass otherwise.
Verdict classify_sign_binary(const BinaryQuartic& t);

}  // namespace qpd

#endif  // QPD_BINARY_CLASSIFIER_HPP
