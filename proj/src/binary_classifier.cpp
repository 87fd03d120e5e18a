#include "qpd/binary_classifier.hpp"

#include "qpd/error.hpp"

namespace qpd {

InvariantPair invariants_ij(const BinaryQuartic& t) {
  const Rational& a = t.t("1111");
  const Rational& b = t.t("1112");
  const Rational& c = t.t("1122");
  const Rational& d = t.t("1222");
  const Rational& e = t.t("2222");
  InvariantPair p;
  p.I = a * e - 4 * b * d + 3 * c * c;
  p.J = a * c * e + 2 * b * c * d - c * c * c - a * d * d - b * b * e;
  p.disc = p.I * p.I * p.I - 27 * p.J * p.J;
  return p;
}

DefinitenessConditions definiteness_conditions(const BinaryQuartic& t) {
  const Rational& a = t.t("1111");
  const Rational& b = t.t("1112");
  const Rational& c = t.t("1122");
  const Rational& d = t.t("1222");
  const Rational& e = t.t("2222");
  if (sgn(a) <= 0 || sgn(e) <= 0) {
    throw Error(ErrorKind::PreconditionViolated, "t1111 and t2222 must be positive");
  }
  // Every square root below is a rational multiple of s = sqrt(a e),
  // sqrt(a) or sqrt(e); comparisons are decided as signs of u + v s.
  const Rational r = a * e;
  const int disc_sign = sgn(invariants_ij(t).disc);

  // |b sqrt(e) -/+ d sqrt(a)|^2 against 6ace +/- 2 s^3, with s^3 = (ae) s.
  const Rational base = b * b * e + d * d * a - 6 * a * c * e;
  const bool minus_bound = sign_of_surd(base, Rational(-2 * b * d - 2 * a * e), r) <= 0;
  const bool plus_bound = sign_of_surd(base, Rational(2 * b * d + 2 * a * e), r) <= 0;

  const int lower = sign_of_surd(Rational(3 * c), Rational(1), r);   // 3c + s
  const int upper = sign_of_surd(Rational(3 * c), Rational(-3), r);  // 3c - 3s
  const bool branch_ii = sign_of_surd(c, Rational(-1), r) > 0 && plus_bound;

  DefinitenessConditions out;

  if (disc_sign == 0) {
    const bool aligned = sgn(b) == sgn(d) && b * b * e == d * d * a;  // b sqrt(e) = d sqrt(a)
    const bool balanced = sign_of_surd(Rational(2 * b * b - 3 * a * c), a, r) == 0;
    const bool strict = sign_of_surd(Rational(3 * a * c), Rational(-3 * a), r) < 0;
    if (aligned && balanced && strict) {
      out.definite = true;
      out.definite_branch = "I-disc0";
    }
  } else if (disc_sign > 0 && minus_bound) {
    if (lower > 0 && upper <= 0) {
      out.definite = true;
      out.definite_branch = "I-branch-i";
    } else if (branch_ii) {
      out.definite = true;
      out.definite_branch = "I-branch-ii";
    }
  }

  if (disc_sign >= 0 && minus_bound) {
    if (lower >= 0 && upper <= 0) {
      out.semidefinite = true;
      out.semidefinite_branch = "II-branch-i";
    } else if (branch_ii) {
      out.semidefinite = true;
      out.semidefinite_branch = "II-branch-ii";
    }
  }
  return out;
}

namespace {

Point2 to_point2(const std::vector<Rational>& v) { return {v.at(0), v.at(1)}; }

/// Exact point with Tx^4 < 0 (want_zero = false) or Tx^4 = 0, x != 0
/// (want_zero = true), searched around the oracle's local minima.
std::optional<Point2> oracle_witness(const BinaryQuartic& t, const OracleConfig& cfg, bool want_zero) {
  const OracleResult res = min_on_sphere(t, cfg);
  const AnyQuartic any(t);
  for (const auto& local : res.local_minima) {
    for (const auto& c : exact_candidates(any, local.point, cfg.max_denominator)) {
      const int s = sgn(c.value);
      if ((want_zero && s == 0) || (!want_zero && s < 0)) return to_point2(c.point);
    }
  }
  return std::nullopt;
}

}  // namespace

Verdict classify_binary(const BinaryQuartic& t, const OracleConfig& cfg) {
  const Rational& a = t.t("1111");
  const Rational& e = t.t("2222");
  Verdict v;
  if (sgn(a) < 0 || sgn(e) < 0) {
    v.definiteness = Definiteness::NotPositiveSemidefinite;
    v.branch = "negative-diagonal";
    v.witness = sgn(a) < 0 ? Point2{1, 0} : Point2{0, 1};
    return v;
  }
  if (sgn(a) == 0 || sgn(e) == 0) {
    // Outside the analytic conditions' hypotheses: e_i with t_iiii = 0 is already a
    // nonzero zero, so only PSD versus not PSD remains open.
    const OracleResult res = min_on_sphere(t, cfg);
    if (res.verdict == NumericVerdict::NotPSD) {
      v.definiteness = Definiteness::NotPositiveSemidefinite;
      v.branch = "zero-diagonal-oracle";
      v.witness = to_point2(res.confirmed_point);
    } else if (res.verdict == NumericVerdict::Inconclusive) {
      v.definiteness = Definiteness::UndeterminedByTheory;
      v.branch = "zero-diagonal-inconclusive";
    } else {
      v.definiteness = Definiteness::PositiveSemidefiniteNotDefinite;
      v.branch = "zero-diagonal-oracle";
      v.witness = sgn(a) == 0 ? Point2{1, 0} : Point2{0, 1};
    }
    return v;
  }

  const DefinitenessConditions cond = definiteness_conditions(t);
  if (cond.definite) {
    v.definiteness = Definiteness::PositiveDefinite;
    v.branch = cond.definite_branch;
  } else if (cond.semidefinite) {
    v.definiteness = Definiteness::PositiveSemidefiniteNotDefinite;
    v.branch = cond.semidefinite_branch;
    v.witness = oracle_witness(t, cfg, true);
  } else {
    v.definiteness = Definiteness::NotPositiveSemidefinite;
    v.branch = "not-II";
    v.witness = oracle_witness(t, cfg, false);
  }
  return v;
}

Verdict classify_sign_binary(const BinaryQuartic& t) {
  for (const auto& c : t.coefficients()) {
    if (abs(c) != 1) throw Error(ErrorKind::NotInSignClass, "every entry must be +1 or -1");
  }
  if (t.t("1111") != 1 || t.t("2222") != 1) {
    throw Error(ErrorKind::NotInSignClass, "t1111 and t2222 must equal 1");
  }
  Verdict v;
  const bool psd = t.t("1122") == 1;
  const bool pd = psd && t.t("1112") * t.t("1222") == -1;
  if (pd) {
    v.definiteness = Definiteness::PositiveDefinite;
    v.branch = "sign-class-pd";
    return v;
  }
  v.definiteness = psd ? Definiteness::PositiveSemidefiniteNotDefinite : Definiteness::NotPositiveSemidefinite;
  v.branch = psd ? "sign-class-psd" : "sign-class-not-psd";
  // In this class Tx^4 is (x1 +/- x2)^4 or negative at (1, +/-1).
  for (const Point2& x : {Point2{1, 1}, Point2{1, -1}}) {
    const int s = sgn(evaluate<Rational, 2>(t, x));
    if ((psd && s == 0) || (!psd && s < 0)) {
      v.witness = x;
      break;
    }
  }
  return v;
}

}  // namespace qpd
