#include "qpd/verdict.hpp"

namespace qpd {

std::string_view to_string(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "PositiveDefinite";
    case Definiteness::PositiveSemidefiniteNotDefinite: return "PositiveSemidefiniteNotDefinite";
    case Definiteness::NotPositiveSemidefinite: return "NotPositiveSemidefinite";
    case Definiteness::UndeterminedByTheory: return "UndeterminedByTheory";
  }
  return "?";
}

int definiteness_rank(Definiteness d) {
  switch (d) {
    case Definiteness::NotPositiveSemidefinite: return 0;
    case Definiteness::PositiveSemidefiniteNotDefinite: return 1;
    case Definiteness::PositiveDefinite: return 2;
    case Definiteness::UndeterminedByTheory: return -1;
  }
  return -1;
}

}  // namespace qpd
