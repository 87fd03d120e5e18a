#include "qpd/ternary_classifier.hpp"

#include <array>

#include "qpd/error.hpp"

namespace qpd {

namespace {

Rational rat(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

TernaryQuartic SignClassTensor::to_tensor() const {
  const std::vector<IndexedEntry> entries{
      {{1, 1, 1, 1}, 1},        {{2, 2, 2, 2}, 1},        {{3, 3, 3, 3}, 1},
      {{1, 1, 1, 2}, t1112},    {{1, 2, 2, 2}, t1222()},  {{1, 1, 1, 3}, t1113},
      {{1, 3, 3, 3}, t1333()},  {{2, 2, 2, 3}, t2223},    {{2, 3, 3, 3}, t2333()},
      {{1, 1, 2, 3}, t1123},    {{1, 2, 2, 3}, t1223},    {{1, 2, 3, 3}, t1233},
      {{1, 1, 2, 2}, b},        {{1, 1, 3, 3}, b},        {{2, 2, 3, 3}, b},
  };
  return build_quartic<3>(entries);
}

std::optional<std::string> class_violation(const TernaryQuartic& t) {
  for (const char* key : {"1111", "2222", "3333"}) {
    if (t.t(key) != 1) return "t" + std::string(key) + " = " + to_string(t.t(key)) + ", expected 1";
  }
  for (const char* key : {"1112", "1222", "1113", "1333", "2223", "2333", "1123", "1223", "1233"}) {
    if (abs(t.t(key)) != 1) return "|t" + std::string(key) + "| = " + to_string(abs(t.t(key))) + ", expected 1";
  }
  constexpr std::array<std::array<const char*, 2>, 3> pairs{{{"1112", "1222"}, {"1113", "1333"}, {"2223", "2333"}}};
  for (const auto& [a, b] : pairs) {
    if (t.t(a) * t.t(b) != -1) {
      return "t" + std::string(a) + " * t" + std::string(b) + " = " + to_string(Rational(t.t(a) * t.t(b))) +
             ", expected -1";
    }
  }
  if (t.t("1122") != t.t("1133") || t.t("1122") != t.t("2233")) {
    return "t1122, t1133, t2233 = " + to_string(t.t("1122")) + ", " + to_string(t.t("1133")) + ", " +
           to_string(t.t("2233")) + " are not equal";
  }
  return std::nullopt;
}

SignClassTensor validate_class(const TernaryQuartic& t) {
  if (auto why = class_violation(t)) throw Error(ErrorKind::NotInClass, *why);
  auto sign_of = [&](const char* key) { return sgn(t.t(key)); };
  SignClassTensor s;
  s.t1112 = sign_of("1112");
  s.t1113 = sign_of("1113");
  s.t2223 = sign_of("2223");
  s.t1123 = sign_of("1123");
  s.t1223 = sign_of("1223");
  s.t1233 = sign_of("1233");
  s.b = t.t("1122");
  return s;
}

std::vector<SignClassTensor> all_sign_patterns(const Rational& b) {
  std::vector<SignClassTensor> out;
  out.reserve(64);
  for (int mask = 0; mask < 64; ++mask) {
    auto bit = [mask](int k) { return (mask >> k) & 1 ? -1 : 1; };
    out.push_back({bit(0), bit(1), bit(2), bit(3), bit(4), bit(5), b});
  }
  return out;
}

bool check_condition_iii(const SignClassTensor& s) {
  const bool chain_a = s.t1222() == s.t2333() && s.t2333() == s.t1113;
  const bool chain_b = s.t1112 == s.t1333() && s.t1333() == s.t2223;
  return chain_a && chain_b && s.t1123 == -1 && s.t1223 == -1 && s.t1233 == -1;
}

bool check_condition_iv(const SignClassTensor& s) {
  const int negatives = (s.t1123 < 0) + (s.t1223 < 0) + (s.t1233 < 0);
  const bool all_positive = negatives == 0;
  return all_positive || check_condition_iii(s) || negatives == 2;
}

namespace {

template <class Predicate>
bool holds_up_to_symmetry(const SignClassTensor& s, Predicate pred) {
  const TernaryQuartic t = s.to_tensor();
  for (const auto& m : all_signed_permutations<3>()) {
    if (pred(validate_class(transform(t, m)))) return true;
  }
  return false;
}

}  // namespace

bool condition_iii_up_to_symmetry(const SignClassTensor& s) { return holds_up_to_symmetry(s, check_condition_iii); }

bool condition_iv_up_to_symmetry(const SignClassTensor& s) { return holds_up_to_symmetry(s, check_condition_iv); }

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::B_11_6: return "b=11/6";
    case Regime::B_2: return "b=2";
    case Regime::B_5_2: return "b=5/2";
    case Regime::B_GE_8_3: return "b>=8/3";
    case Regime::OutOfRegime: return "out-of-regime";
  }
  return "?";
}

Regime regime_of(const Rational& b) {
  if (b == rat(11, 6)) return Regime::B_11_6;
  if (b == 2) return Regime::B_2;
  if (b == rat(5, 2)) return Regime::B_5_2;
  if (b >= rat(8, 3)) return Regime::B_GE_8_3;
  return Regime::OutOfRegime;
}

namespace {

// Representatives used by the necessity proofs: t1112 = t2333 = t1113 = 1,
// t1222 = t1333 = t2223 = -1, with the listed (t1123, t1223, t1233).
struct ProofCase {
  const char* name;
  std::array<int, 3> mixed;
  Point3 point;
};

SignClassTensor representative(const std::array<int, 3>& mixed, const Rational& b) {
  return {1, 1, -1, mixed[0], mixed[1], mixed[2], b};
}

std::vector<ProofCase> proof_cases(Regime regime) {
  const Point3 fifth{rat(1, 5), rat(-1, 5), 1};
  const Point3 half{rat(1, 2), rat(-1, 2), 1};
  const Point3 quarter{rat(1, 4), rat(-1, 4), 1};
  const Point3 integral{-1, -3, -1};
  switch (regime) {
    case Regime::B_11_6:
      return {{"i-case-1", {-1, -1, 1}, fifth},
              {"i-case-2", {1, -1, 1}, half},
              {"i-case-3", {1, 1, 1}, fifth},
              {"i-case-4", {-1, -1, -1}, integral}};
    case Regime::B_2:
      return {{"ii-case-1", {-1, -1, 1}, fifth},
              {"ii-case-2", {1, -1, 1}, half},
              {"ii-case-3", {1, 1, 1}, fifth},
              {"ii-case-4", {-1, -1, -1}, integral}};
    case Regime::B_5_2:
      return {{"iii-case-1", {1, -1, 1}, quarter}, {"iii-case-2", {-1, -1, -1}, integral}};
    default:
      return {};
  }
}

}  // namespace

std::optional<ProofWitness> proof_witness(const SignClassTensor& s) {
  const TernaryQuartic t = s.to_tensor();
  const auto cases = proof_cases(regime_of(s.b));
  // Identity first, so a pattern that is itself a proof representative gets
  // that case's own point.
  for (const auto& m : all_signed_permutations<3>()) {
    const TernaryQuartic image = transform(t, m);
    for (const auto& c : cases) {
      // transform(t, m)(x) = t(Mx), so Mx is a witness for t when x is one
      // for the representative.
      if (image == representative(c.mixed, s.b).to_tensor()) {
        Point3 w = m.apply(c.point);
        if (sgn(evaluate<Rational, 3>(t, w)) < 0) return ProofWitness{std::move(w), c.name};
      }
    }
  }
  return std::nullopt;
}

std::optional<Point3> boundary_zero(const SignClassTensor& s) {
  if (regime_of(s.b) != Regime::B_11_6) return std::nullopt;
  // (III) with t1222 = t2333 = t1113 = 1 vanishes at (1, 1, 1).
  const TernaryQuartic rep = SignClassTensor{-1, 1, -1, -1, -1, -1, s.b}.to_tensor();
  const TernaryQuartic t = s.to_tensor();
  for (const auto& m : all_signed_permutations<3>()) {
    if (transform(t, m) == rep) return m.apply(Point3{1, 1, 1});
  }
  return std::nullopt;
}

namespace {

std::optional<Point3> oracle_negative(const TernaryQuartic& t, const OracleConfig& cfg) {
  const OracleResult res = min_on_sphere(t, cfg);
  if (res.verdict == NumericVerdict::NotPSD && res.confirmed_point.size() == 3) {
    return Point3{res.confirmed_point[0], res.confirmed_point[1], res.confirmed_point[2]};
  }
  return std::nullopt;
}

void attach_negative_witness(ClassVerdict& v, const SignClassTensor& s, const TernaryQuartic& t) {
  if (auto pw = proof_witness(s)) {
    v.witness = pw->point;
    v.witness_source = pw->proof_case;
  } else if (auto w = oracle_negative(t, OracleConfig{})) {
    v.witness = *w;
    v.witness_source = "oracle";
  }
}

Definiteness in_regime(const SignClassTensor& s, Regime regime) {
  switch (regime) {
    case Regime::B_11_6:
      return condition_iii_up_to_symmetry(s) ? Definiteness::PositiveSemidefiniteNotDefinite
                                             : Definiteness::NotPositiveSemidefinite;
    case Regime::B_2:
      return condition_iii_up_to_symmetry(s) ? Definiteness::PositiveDefinite : Definiteness::NotPositiveSemidefinite;
    case Regime::B_5_2:
      return condition_iv_up_to_symmetry(s) ? Definiteness::PositiveDefinite : Definiteness::NotPositiveSemidefinite;
    case Regime::B_GE_8_3:
      return Definiteness::PositiveDefinite;
    case Regime::OutOfRegime:
      break;
  }
  return Definiteness::UndeterminedByTheory;
}

}  // namespace

ClassVerdict classify_ternary(const TernaryQuartic& t, const OracleConfig* advisory_cfg) {
  const SignClassTensor s = validate_class(t);
  ClassVerdict v;
  v.regime = regime_of(s.b);
  v.condition_iii = check_condition_iii(s);
  v.condition_iv = check_condition_iv(s);
  v.condition_iii_symmetric = condition_iii_up_to_symmetry(s);
  v.condition_iv_symmetric = condition_iv_up_to_symmetry(s);
  v.definiteness = in_regime(s, v.regime);

  switch (v.definiteness) {
    case Definiteness::NotPositiveSemidefinite:
      attach_negative_witness(v, s, t);
      break;
    case Definiteness::PositiveSemidefiniteNotDefinite:
      v.witness = boundary_zero(s);
      v.witness_source = "i-sufficiency-zero";
      break;
    case Definiteness::PositiveDefinite:
      break;
    case Definiteness::UndeterminedByTheory: {
      // T_b - T_b' = 6 (b - b') (x1^2 x2^2 + x1^2 x3^2 + x2^2 x3^2) >= 0 for b >= b'.
      for (const Rational& studied : {rat(5, 2), rat(2), rat(11, 6)}) {
        if (studied > s.b) continue;
        SignClassTensor lower = s;
        lower.b = studied;
        const Definiteness d = in_regime(lower, regime_of(studied));
        if (d == Definiteness::PositiveDefinite || d == Definiteness::PositiveSemidefiniteNotDefinite) {
          v.lower_bound = d;
          v.lower_bound_from = studied;
          break;
        }
      }
      if (advisory_cfg) {
        const OracleResult res = min_on_sphere(t, *advisory_cfg);
        v.advisory = res.verdict;
        if (res.verdict == NumericVerdict::NotPSD && res.confirmed_point.size() == 3) {
          v.witness = Point3{res.confirmed_point[0], res.confirmed_point[1], res.confirmed_point[2]};
          v.witness_source = "oracle";
        }
      }
      break;
    }
  }
  return v;
}

}  // namespace qpd
