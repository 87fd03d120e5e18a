#ifndef QPD_VERDICT_HPP
#define QPD_VERDICT_HPP

#include <string_view>

namespace qpd {

enum class Definiteness {
  PositiveDefinite,
  PositiveSemidefiniteNotDefinite,
  NotPositiveSemidefinite,
  UndeterminedByTheory,
};

std::string_view to_string(Definiteness d);

/// NotPSD < PSD-not-PD < PD; Undetermined has no rank (-1).
int definiteness_rank(Definiteness d);

}  // namespace qpd

#endif  // QPD_VERDICT_HPP
