#ifndef QPD_TERNARY_CLASSIFIER_HPP
#define QPD_TERNARY_CLASSIFIER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpd/numeric_oracle.hpp"
#include "qpd/tensor.hpp"
#include "qpd/verdict.hpp"

namespace qpd {

/// A ternary quartic with unit diagonal, unit-magnitude mixed entries,
/// t_ijjj * t_iiij = -1, and t1122 = t1133 = t2233 = b. The six free signs
/// are t1112, t1113, t2223 (the paired t1222, t1333, t2333 are their
/// negatives) and t1123, t1223, t1233.
struct SignClassTensor {
  int t1112 = 1;
  int t1113 = 1;
  int t2223 = 1;
  int t1123 = 1;
  int t1223 = 1;
  int t1233 = 1;
  Rational b;

  int t1222() const { return -t1112; }
  int t1333() const { return -t1113; }
  int t2333() const { return -t2223; }

  TernaryQuartic to_tensor() const;

  bool operator==(const SignClassTensor&) const = default;
};

/// Throws NotInClass naming the first failed constraint and its index.
SignClassTensor validate_class(const TernaryQuartic& t);

/// The reason validate_class would fail, or nullopt for class members.
std::optional<std::string> class_violation(const TernaryQuartic& t);

/// The 64 sign patterns at level b, bit k of the pattern number selecting
/// -1 for (t1112, t1113, t2223, t1123, t1223, t1233)[k].
std::vector<SignClassTensor> all_sign_patterns(const Rational& b);

/// t1222 = t2333 = t1113, t1112 = t1333 = t2223 and t1123 = t1223 = t1233 = -1,
/// exactly as written.
bool check_condition_iii(const SignClassTensor& s);

/// t1123 = t1223 = t1233 = 1; or condition (III); or exactly two of
/// t1123, t1223, t1233 equal to -1, exactly as written.
bool check_condition_iv(const SignClassTensor& s);

/// The condition holds for some image of `s` under a signed permutation of
/// the coordinates. Coordinate reflections and relabelings preserve both
/// the class and definiteness, so these are the predicates the classifier
/// decides with.
bool condition_iii_up_to_symmetry(const SignClassTensor& s);
bool condition_iv_up_to_symmetry(const SignClassTensor& s);

enum class Regime { B_11_6, B_2, B_5_2, B_GE_8_3, OutOfRegime };

std::string_view to_string(Regime r);

Regime regime_of(const Rational& b);

struct ClassVerdict {
  Definiteness definiteness = Definiteness::UndeterminedByTheory;
  Regime regime = Regime::OutOfRegime;
  bool condition_iii = false;            ///< literal
  bool condition_iv = false;             ///< literal
  bool condition_iii_symmetric = false;  ///< up to signed permutation
  bool condition_iv_symmetric = false;
  /// Exact certificate: Tx^4 < 0 when not PSD, Tx^4 = 0 when PSD-not-PD.
  std::optional<Point3> witness;
  std::string witness_source;

  // Only for OutOfRegime.
  std::optional<Definiteness> lower_bound;  ///< inherited by monotonicity in b
  std::optional<Rational> lower_bound_from;
  std::optional<NumericVerdict> advisory;   ///< oracle, non-analytic
};

/// Regime dispatch: b = 11/6 is PSD (never PD) iff (III); b = 2 is PD iff
/// (III); b = 5/2 is PD iff (IV); b >= 8/3 is PD. Other b are
/// UndeterminedByTheory; if `advisory_cfg` is given the oracle's verdict is
/// attached as advice. Throws NotInClass.
ClassVerdict classify_ternary(const TernaryQuartic& t, const OracleConfig* advisory_cfg = nullptr);

struct ProofWitness {
  Point3 point;
  std::string proof_case;  ///< e.g. "ii-case-4"
};

/// Counterexample point from the necessity proofs, carried through the
/// signed permutation relating `s` to the proof's representative pattern.
/// Nothing for patterns with no counterexample or for b outside
/// {11/6, 2, 5/2}.
std::optional<ProofWitness> proof_witness(const SignClassTensor& s);

/// For b = 11/6 patterns satisfying (III) up to symmetry: the image of
/// (1, 1, 1), where Tx^4 = 0.
std::optional<Point3> boundary_zero(const SignClassTensor& s);

}  // namespace qpd

#endif  // QPD_TERNARY_CLASSIFIER_HPP
