#include "qpd/numeric_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qpd/error.hpp"
#include "qpd/oracle_kernels.hpp"

namespace qpd {

std::string_view to_string(NumericVerdict v) {
  switch (v) {
    case NumericVerdict::PositiveDefinite: return "PD";
    case NumericVerdict::BoundaryPSD: return "BoundaryPSD";
    case NumericVerdict::NotPSD: return "NotPSD";
    case NumericVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string_view to_string(Agreement a) {
  switch (a) {
    case Agreement::Agree: return "agree";
    case Agreement::Conflict: return "conflict";
    case Agreement::Inconclusive: return "inconclusive";
    case Agreement::NotApplicable: return "n/a";
  }
  return "?";
}

void OracleConfig::validate() const {
  auto bad = [](const std::string& m) { throw Error(ErrorKind::InvalidConfig, m); };
  if (grid_resolution < 8) bad("grid_resolution must be >= 8");
  if (starts < 1) bad("starts must be >= 1");
  if (refine_iters < 0) bad("refine_iters must be >= 0");
  if (!(refine_tol > 0.0)) bad("refine_tol must be > 0");
  if (!(verdict_tol > 0.0)) bad("verdict_tol must be > 0");
  if (max_denominator < 1) bad("max_denominator must be >= 1");
}

NumericVerdict numeric_verdict(double min_value, double verdict_tol) {
  if (min_value > verdict_tol) return NumericVerdict::PositiveDefinite;
  if (min_value < -verdict_tol) return NumericVerdict::NotPSD;
  return NumericVerdict::BoundaryPSD;
}

std::vector<Rational> rationalize(std::span<const double> x, long max_denominator) {
  if (max_denominator < 1) throw Error(ErrorKind::PreconditionViolated, "max_denominator must be >= 1");
  const mpz_class bound(max_denominator);
  std::vector<Rational> out;
  out.reserve(x.size());
  for (double v : x) out.push_back(best_rational_approximation(rational_from_double(v), bound));
  return out;
}

std::optional<Rational> rationalize_and_confirm(const AnyQuartic& tensor, std::span<const double> x,
                                                long max_denominator) {
  const auto point = rationalize(x, max_denominator);
  return evaluate(tensor, std::span<const Rational>(point));
}

std::vector<ExactCandidate> exact_candidates(const AnyQuartic& tensor, std::span<const double> x,
                                             long max_denominator) {
  std::vector<long> ladder;
  for (long d = 1; d < max_denominator; d *= 2) ladder.push_back(d);
  ladder.push_back(max_denominator);

  double largest = 0.0;
  for (double v : x) largest = std::max(largest, std::abs(v));
  std::vector<double> normalized(x.begin(), x.end());
  if (largest > 0.0) {
    for (auto& v : normalized) v /= largest;
  }

  std::vector<ExactCandidate> out;
  auto consider = [&](std::span<const double> direction, long den) {
    auto point = rationalize(direction, den);
    if (std::all_of(point.begin(), point.end(), [](const Rational& r) { return sgn(r) == 0; })) return;
    for (const auto& c : out) {
      if (c.point == point) return;
    }
    Rational value = evaluate(tensor, std::span<const Rational>(point));
    out.push_back({std::move(point), std::move(value)});
  };
  for (long den : ladder) {
    if (largest > 0.0) consider(normalized, den);
    consider(x, den);
  }
  return out;
}

namespace {

template <int Dim>
OracleResult minimize(const SymmetricQuartic<Dim>& tensor, const OracleConfig& cfg, Execution exec) {
  cfg.validate();
  for (double w : tensor.float_weights()) {
    if (!std::isfinite(w)) throw Error(ErrorKind::NonFiniteValue, "coefficient does not fit in a double");
  }

  const auto seeds = kernels::hemisphere_seeds<Dim>(cfg.grid_resolution);
  std::vector<double> values(seeds.size());
  if (exec == Execution::Parallel) {
    kernels::evaluate_seeds_parallel<Dim>(tensor, seeds, values);
  } else {
    kernels::evaluate_seeds_serial<Dim>(tensor, seeds, values);
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(ErrorKind::NonFiniteValue, "Tx^4 overflowed on the seed grid");
  }

  // Best `starts` seeds, ties broken by enumeration order.
  std::vector<std::size_t> order(seeds.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto keep = std::min(order.size(), static_cast<std::size_t>(cfg.starts));
  auto by_value = [&](std::size_t a, std::size_t b) { return values[a] < values[b] || (values[a] == values[b] && a < b); };
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep), order.end(), by_value);
  std::vector<Point<double, Dim>> starts;
  starts.reserve(keep);
  for (std::size_t k = 0; k < keep; ++k) starts.push_back(seeds[order[k]]);

  std::vector<kernels::Refined<Dim>> refined(keep);
  if (exec == Execution::Parallel) {
    kernels::refine_starts_parallel<Dim>(tensor, starts, cfg.refine_iters, cfg.refine_tol, refined);
  } else {
    kernels::refine_starts_serial<Dim>(tensor, starts, cfg.refine_iters, cfg.refine_tol, refined);
  }
  for (const auto& r : refined) {
    if (!std::isfinite(r.value)) throw Error(ErrorKind::NonFiniteValue, "Tx^4 overflowed during refinement");
  }

  std::vector<std::size_t> ranked(keep);
  std::iota(ranked.begin(), ranked.end(), std::size_t{0});
  std::stable_sort(ranked.begin(), ranked.end(),
                   [&](std::size_t a, std::size_t b) { return refined[a].value < refined[b].value; });

  OracleResult result;
  for (std::size_t k : ranked) {
    result.local_minima.push_back({refined[k].value, std::vector<double>(refined[k].x.begin(), refined[k].x.end())});
  }
  result.min_value = result.local_minima.front().value;
  result.argmin = result.local_minima.front().point;
  result.verdict = numeric_verdict(result.min_value, cfg.verdict_tol);

  const AnyQuartic any(tensor);
  const std::vector<ExactCandidate> at_argmin = exact_candidates(any, result.argmin, cfg.max_denominator);

  auto adopt = [&](const ExactCandidate& c) {
    result.confirmed_point = c.point;
    result.confirmed_exact = c.value;
  };

  // Search for an exact negative certificate, first near the argmin, then
  // near the other local minima that are numerically negative.
  const ExactCandidate* negative = nullptr;
  std::vector<ExactCandidate> elsewhere;
  for (const auto& c : at_argmin) {
    if (sgn(c.value) < 0) {
      negative = &c;
      break;
    }
  }
  if (!negative && result.verdict == NumericVerdict::NotPSD) {
    for (std::size_t k = 1; k < result.local_minima.size() && !negative; ++k) {
      if (result.local_minima[k].value >= -cfg.verdict_tol) break;
      elsewhere = exact_candidates(any, result.local_minima[k].point, cfg.max_denominator);
      for (const auto& c : elsewhere) {
        if (sgn(c.value) < 0) {
          negative = &c;
          break;
        }
      }
    }
  }

  if (negative) {
    adopt(*negative);
    result.verdict = NumericVerdict::NotPSD;
    return result;
  }
  if (result.verdict == NumericVerdict::NotPSD) result.verdict = NumericVerdict::Inconclusive;
  if (result.verdict == NumericVerdict::BoundaryPSD) {
    for (const auto& c : at_argmin) {
      if (sgn(c.value) == 0) {
        adopt(c);
        return result;
      }
    }
  }
  // Fall back to the finest rationalization of the raw argmin.
  const auto point = rationalize(result.argmin, cfg.max_denominator);
  if (std::any_of(point.begin(), point.end(), [](const Rational& r) { return sgn(r) != 0; })) {
    result.confirmed_point = point;
    result.confirmed_exact = evaluate(any, std::span<const Rational>(point));
  }
  return result;
}

}  // namespace

OracleResult min_on_sphere(const BinaryQuartic& tensor, const OracleConfig& cfg, Execution exec) {
  return minimize<2>(tensor, cfg, exec);
}

OracleResult min_on_sphere(const TernaryQuartic& tensor, const OracleConfig& cfg, Execution exec) {
  return minimize<3>(tensor, cfg, exec);
}

OracleResult min_on_sphere(const AnyQuartic& tensor, const OracleConfig& cfg, Execution exec) {
  return std::visit([&](const auto& t) { return min_on_sphere(t, cfg, exec); }, tensor);
}

Agreement compare_verdicts(Definiteness analytic, const OracleResult& numeric, double verdict_tol) {
  NumericVerdict expected{};
  switch (analytic) {
    case Definiteness::PositiveDefinite: expected = NumericVerdict::PositiveDefinite; break;
    case Definiteness::PositiveSemidefiniteNotDefinite: expected = NumericVerdict::BoundaryPSD; break;
    case Definiteness::NotPositiveSemidefinite: expected = NumericVerdict::NotPSD; break;
    case Definiteness::UndeterminedByTheory: return Agreement::NotApplicable;
  }
  if (numeric.verdict == expected) return Agreement::Agree;
  // An exact negative value refutes any PSD claim outright.
  if (numeric.verdict == NumericVerdict::NotPSD && numeric.confirmed_exact && sgn(*numeric.confirmed_exact) < 0) {
    return Agreement::Conflict;
  }
  if (numeric.verdict == NumericVerdict::Inconclusive) return Agreement::Inconclusive;
  const double m = numeric.min_value;
  const double margin = 10.0 * verdict_tol;
  if (std::abs(m - verdict_tol) <= margin || std::abs(m + verdict_tol) <= margin) return Agreement::Inconclusive;
  return Agreement::Conflict;
}

AgreementReport verify_verdict(const AnyQuartic& tensor, Definiteness analytic, const OracleConfig& cfg) {
  AgreementReport report;
  report.numeric = min_on_sphere(tensor, cfg);
  report.agreement = compare_verdicts(analytic, report.numeric, cfg.verdict_tol);
  std::ostringstream detail;
  detail << "analytic " << to_string(analytic) << ", numeric " << to_string(report.numeric.verdict)
         << " (min " << report.numeric.min_value << ")";
  report.detail = detail.str();
  return report;
}

}  // namespace qpd
