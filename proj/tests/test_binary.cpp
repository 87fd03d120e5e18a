#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "qpd/binary_classifier.hpp"

using namespace qpd;
using qpd::test::rat;
using qpd::test::thrown_kind;

namespace {

/// Discriminant of a x^4 + b x^3 y + c x^2 y^2 + d x y^3 + e y^4, textbook formula.
Rational quartic_discriminant(const BinaryQuartic& t) {
  const Rational a = t.t("1111"), b = 4 * t.t("1112"), c = 6 * t.t("1122"), d = 4 * t.t("1222"), e = t.t("2222");
  return 256 * a * a * a * e * e * e - 192 * a * a * b * d * e * e - 128 * a * a * c * c * e * e +
         144 * a * a * c * d * d * e - 27 * a * a * d * d * d * d + 144 * a * b * b * c * e * e -
         6 * a * b * b * d * d * e - 80 * a * b * c * c * d * e + 18 * a * b * c * d * d * d +
         16 * a * c * c * c * c * e - 4 * a * c * c * c * d * d - 27 * b * b * b * b * e * e +
         18 * b * b * b * c * d * e - 4 * b * b * b * d * d * d - 4 * b * b * c * c * c * e +
         b * b * c * c * d * d;
}

/// Minimum of Tx^4 over 20000 equally spaced directions, in doubles.
double dense_circle_min(const BinaryQuartic& t) {
  double best = INFINITY;
  constexpr int kSteps = 20000;
  for (int k = 0; k < kSteps; ++k) {
    const double th = std::numbers::pi * k / kSteps;
    best = std::min(best, evaluate<double, 2>(t, Point<double, 2>{std::cos(th), std::sin(th)}));
  }
  return best;
}

void check_witness(const BinaryQuartic& t, const Verdict& v) {
  if (v.definiteness == Definiteness::NotPositiveSemidefinite) {
    REQUIRE(v.witness);
    CHECK(sgn(evaluate<Rational, 2>(t, *v.witness)) < 0);
  }
  if (v.definiteness == Definiteness::PositiveSemidefiniteNotDefinite && v.witness) {
    CHECK(sgn(evaluate<Rational, 2>(t, *v.witness)) == 0);
    CHECK((sgn((*v.witness)[0]) != 0 || sgn((*v.witness)[1]) != 0));
  }
}

}  // namespace

TEST_SUITE("binary_classifier") {

TEST_CASE("invariant examples") {
  auto ij = invariants_ij(make_binary(1, 1, 1, 1, 1));
  CHECK(ij.I == 0);
  CHECK(ij.J == 0);
  CHECK(ij.disc == 0);
  ij = invariants_ij(make_binary(1, 1, 1, -1, 1));
  CHECK(ij.I == 8);
  CHECK(ij.J == -4);
  CHECK(ij.disc == 80);
  ij = invariants_ij(BinaryQuartic());
  CHECK(ij.I == 0);
  CHECK(ij.J == 0);
  CHECK(ij.disc == 0);
}

TEST_CASE("classify_binary examples") {
  Verdict v = classify_binary(make_binary(1, 1, 1, 1, 1));
  CHECK(v.definiteness == Definiteness::PositiveSemidefiniteNotDefinite);
  check_witness(make_binary(1, 1, 1, 1, 1), v);

  v = classify_binary(make_binary(1, 1, 1, -1, 1));
  CHECK(v.definiteness == Definiteness::PositiveDefinite);

  const BinaryQuartic indefinite = make_binary(1, 1, -1, 1, 1);
  v = classify_binary(indefinite);
  CHECK(v.definiteness == Definiteness::NotPositiveSemidefinite);
  check_witness(indefinite, v);
  CHECK(evaluate<Rational, 2>(indefinite, Point2{1, -1}) == -12);
}

TEST_CASE("classify_sign_binary examples") {
  CHECK(classify_sign_binary(make_binary(1, -1, 1, 1, 1)).definiteness == Definiteness::PositiveDefinite);
  CHECK(classify_sign_binary(make_binary(1, 1, -1, -1, 1)).definiteness == Definiteness::NotPositiveSemidefinite);
  CHECK(classify_sign_binary(make_binary(1, -1, 1, -1, 1)).definiteness ==
        Definiteness::PositiveSemidefiniteNotDefinite);
  CHECK(thrown_kind([] { classify_sign_binary(make_binary(2, 1, 1, 1, 1)); }) == ErrorKind::NotInSignClass);
  CHECK(thrown_kind([] { classify_sign_binary(make_binary(1, 0, 1, 1, 1)); }) == ErrorKind::NotInSignClass);
  CHECK(thrown_kind([] { classify_sign_binary(make_binary(-1, 1, 1, 1, 1)); }) == ErrorKind::NotInSignClass);
}

TEST_CASE("sign class agrees with the general classifier and its witnesses") {
  for (int mask = 0; mask < 8; ++mask) {
    const int b = mask & 1 ? -1 : 1, c = mask & 2 ? -1 : 1, d = mask & 4 ? -1 : 1;
    const BinaryQuartic t = make_binary(1, b, c, d, 1);
    CAPTURE(mask);
    const Verdict fast = classify_sign_binary(t);
    const Verdict general = classify_binary(t);
    CHECK(fast.definiteness == general.definiteness);
    check_witness(t, fast);
    check_witness(t, general);
  }
}

TEST_CASE("boundary diagonals") {
  CHECK(thrown_kind([] { definiteness_conditions(make_binary(0, 0, 1, 0, 1)); }) ==
        ErrorKind::PreconditionViolated);

  const BinaryQuartic negative = make_binary(1, 0, 0, 0, -2);
  Verdict v = classify_binary(negative);
  CHECK(v.definiteness == Definiteness::NotPositiveSemidefinite);
  CHECK(v.branch == "negative-diagonal");
  CHECK(v.witness == Point2{0, 1});

  // 6 x^2 y^2 + y^4 vanishes at e1 and is otherwise positive.
  const BinaryQuartic zero_diag = make_binary(0, 0, 1, 0, 1);
  v = classify_binary(zero_diag);
  CHECK(v.definiteness == Definiteness::PositiveSemidefiniteNotDefinite);
  check_witness(zero_diag, v);

  // 4 x^3 y + y^4 changes sign.
  const BinaryQuartic odd = make_binary(0, 1, 0, 0, 1);
  v = classify_binary(odd);
  CHECK(v.definiteness == Definiteness::NotPositiveSemidefinite);
  check_witness(odd, v);

  CHECK(classify_binary(BinaryQuartic()).definiteness == Definiteness::PositiveSemidefiniteNotDefinite);
}

TEST_CASE("branch labels") {
  // (x^2 + y^2)^2: disc = 0 branch of (I).
  auto c = definiteness_conditions(make_binary(1, 0, rat(1, 3), 0, 1));
  CHECK(c.definite);
  CHECK(c.definite_branch == "I-disc0");
  c = definiteness_conditions(make_binary(1, 0, 0, 0, 1));
  CHECK(c.definite);
  CHECK(c.definite_branch == "I-branch-i");
  c = definiteness_conditions(make_binary(1, 0, 2, 0, 1));
  CHECK(c.definite);
  CHECK(c.definite_branch == "I-branch-ii");
  // (x^2 - y^2)^2 = x^4 - 2 x^2 y^2 + y^4: PSD with real double roots.
  c = definiteness_conditions(make_binary(1, 0, rat(-1, 3), 0, 1));
  CHECK_FALSE(c.definite);
  CHECK(c.semidefinite);
}

TEST_CASE("disc has the sign of the discriminant") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 1000; ++k) {
    const auto t = test::random_quartic<2>(rng);
    const InvariantPair ij = invariants_ij(t);
    CHECK(quartic_discriminant(t) == 256 * ij.disc);
  }
}

TEST_CASE("random tensors against a dense circle scan") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> diag(1, 3);
  int decided = 0;
  for (int k = 0; k < 1500; ++k) {
    const BinaryQuartic t = make_binary(diag(rng), coef(rng), coef(rng), coef(rng), diag(rng));
    const DefinitenessConditions c = definiteness_conditions(t);
    const double m = dense_circle_min(t);
    CAPTURE(to_string(t.t("1112")));
    CAPTURE(to_string(t.t("1122")));
    CAPTURE(to_string(t.t("1222")));
    if (m < -1e-6) {
      CHECK_FALSE(c.semidefinite);
      ++decided;
    } else if (m > 1e-6) {
      CHECK(c.definite);
      ++decided;
    }
    if (c.definite) CHECK(c.semidefinite);
  }
  CHECK(decided > 1000);
}

TEST_CASE("scaling covariance") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> diag(1, 3);
  for (int k = 0; k < 1000; ++k) {
    const BinaryQuartic t = make_binary(diag(rng), coef(rng), coef(rng), coef(rng), diag(rng));
    Rational lambda = test::random_rational(rng, 50, 50);
    lambda = abs(lambda);
    if (sgn(lambda) == 0) lambda = rat(7, 3);
    const DefinitenessConditions a = definiteness_conditions(t);
    const DefinitenessConditions b = definiteness_conditions(scaled(t, lambda));
    CHECK(a.definite == b.definite);
    CHECK(a.semidefinite == b.semidefinite);
  }
}

}  // TEST_SUITE
