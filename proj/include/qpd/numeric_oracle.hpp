#ifndef QPD_NUMERIC_ORACLE_HPP
#define QPD_NUMERIC_ORACLE_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qpd/tensor.hpp"
#include "qpd/verdict.hpp"

namespace qpd {

struct OracleConfig {
  int grid_resolution = 256;  ///< polar samples on the hemisphere; 2x that in azimuth
  int refine_iters = 500;
  double refine_tol = 1e-12;  ///< tangential gradient norm
  double verdict_tol = 1e-8;  ///< half-width of the BoundaryPSD band
  int starts = 32;
  long max_denominator = 1'000'000;

  /// Throws InvalidConfig unless grid_resolution >= 8, starts >= 1,
  /// refine_iters >= 0, both tolerances > 0 and max_denominator >= 1.
  void validate() const;
};

enum class NumericVerdict { PositiveDefinite, BoundaryPSD, NotPSD, Inconclusive };

std::string_view to_string(NumericVerdict v);

enum class Execution { Serial, Parallel };

struct LocalMinimum {
  double value;
  std::vector<double> point;  ///< unit norm
};

struct OracleResult {
  double min_value = 0.0;
  std::vector<double> argmin;                 ///< unit norm
  std::optional<Rational> confirmed_exact;    ///< Tx^4 at confirmed_point
  std::vector<Rational> confirmed_point;      ///< rationalized argmin (empty if none)
  NumericVerdict verdict = NumericVerdict::Inconclusive;
  std::vector<LocalMinimum> local_minima;     ///< every refined start, best first
};

/// Minimum of Tx^4 over the unit circle/sphere: hemisphere grid seeding,
/// then projected gradient descent with Armijo backtracking from the best
/// `starts` seeds. The best refined point is rationalized and evaluated
/// exactly. A NotPSD verdict always carries an exactly negative
/// confirmed_exact; otherwise it is downgraded to Inconclusive.
///
/// Serial and Parallel execution give bit-identical results.
OracleResult min_on_sphere(const BinaryQuartic& tensor, const OracleConfig& cfg = {},
                           Execution exec = Execution::Parallel);
OracleResult min_on_sphere(const TernaryQuartic& tensor, const OracleConfig& cfg = {},
                           Execution exec = Execution::Parallel);
OracleResult min_on_sphere(const AnyQuartic& tensor, const OracleConfig& cfg = {},
                           Execution exec = Execution::Parallel);

/// Maps a sphere minimum onto the three-way numeric verdict.
NumericVerdict numeric_verdict(double min_value, double verdict_tol);

enum class Agreement { Agree, Conflict, Inconclusive, NotApplicable };

std::string_view to_string(Agreement a);

struct AgreementReport {
  Agreement agreement = Agreement::NotApplicable;
  OracleResult numeric;
  std::string detail;
};

/// Compares an analytic verdict with the oracle. PSD-not-PD pairs with
/// BoundaryPSD. A mismatch whose minimum lies within 10 * verdict_tol of
/// a band edge is Inconclusive rather than Conflict.
AgreementReport verify_verdict(const AnyQuartic& tensor, Definiteness analytic, const OracleConfig& cfg = {});

/// Agreement from an already computed oracle result.
Agreement compare_verdicts(Definiteness analytic, const OracleResult& numeric, double verdict_tol);

/// Coordinate-wise best rational approximation with bounded denominator.
std::vector<Rational> rationalize(std::span<const double> x, long max_denominator);

/// Rationalizes `x` and evaluates the tensor exactly there.
std::optional<Rational> rationalize_and_confirm(const AnyQuartic& tensor, std::span<const double> x,
                                                long max_denominator);

struct ExactCandidate {
  std::vector<Rational> point;
  Rational value;
};

/// Rational points near the direction of `x` (raw and max-component
/// normalized, denominators 1, 2, 4, ..., max_denominator), in that order,
/// skipping the origin and duplicates.
std::vector<ExactCandidate> exact_candidates(const AnyQuartic& tensor, std::span<const double> x,
                                             long max_denominator);

}  // namespace qpd

#endif  // QPD_NUMERIC_ORACLE_HPP
