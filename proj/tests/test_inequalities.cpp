#include <doctest.h>

#include "helpers.hpp"
#include "qpd/inequality_suite.hpp"

using namespace qpd;
using qpd::test::rat;
using qpd::test::thrown_kind;

namespace {

InequalityId id_of(const char* text) { return parse_inequality_id(text); }

Rational squares(const Point3& x) {
  return x[0] * x[0] * x[1] * x[1] + x[0] * x[0] * x[2] * x[2] + x[1] * x[1] * x[2] * x[2];
}

}  // namespace

TEST_SUITE("inequality_suite") {

TEST_CASE("ids") {
  CHECK(all_inequality_variants().size() == 20);
  for (const InequalityId& id : all_inequality_variants()) CHECK(parse_inequality_id(to_string(id)) == id);
  CHECK(thrown_kind([] { id_of("C34_i"); }) == ErrorKind::UnknownId);
  CHECK(thrown_kind([] { id_of("C32_i+swap12"); }) == ErrorKind::UnknownId);
  CHECK(thrown_kind([] { id_of("C33_i+swap12+swap13"); }) == ErrorKind::UnknownId);
  CHECK(thrown_kind([] { id_of("C33_i+swap99"); }) == ErrorKind::UnknownId);
  CHECK(thrown_kind([] { residual<Rational>({InequalityKind::C32_ii, {true, false, false}}, Point3{1, 2, 3}); }) ==
        ErrorKind::UnknownId);
  CHECK_FALSE(is_strict(InequalityKind::C32_i));
  CHECK(is_strict(InequalityKind::C33_iv));
}

TEST_CASE("residual examples") {
  CHECK(residual<Rational>(id_of("C32_i"), Point3{1, 1, 1}) == 0);
  CHECK(residual<Rational>(id_of("C32_ii"), Point3{1, 1, 1}) == 3);
  CHECK(residual<Rational>(id_of("C33_i"), Point3{0, 0, 0}) == 0);
  // (x1+x2-x3)^4 + 5 Q - 8 (x1^3 x2 - x1^3 x3 - x2 x3^3) - 24 x1 x2 x3^2 at (2, 0, 1):
  // 1 + 5 * 4 - 8 * (-8) = 85.
  CHECK(residual<Rational>(id_of("C32_i"), Point3{2, 0, 1}) == 85);
}

TEST_CASE("residual tensors match direct evaluation") {
  std::mt19937_64 rng(17);
  for (const InequalityId& id : all_inequality_variants()) {
    const TernaryQuartic t = residual_tensor(id);
    for (int k = 0; k < 50; ++k) {
      const Point3 x = test::random_point<3>(rng);
      CHECK(evaluate<Rational, 3>(t, x) == residual<Rational>(id, x));
      CHECK(residual<Rational>(id, x) == residual<Rational>(id, Point3{-x[0], -x[1], -x[2]}));
      CHECK(residual<double>(id, test::to_double<3>(x)) ==
            doctest::Approx(residual<Rational>(id, x).get_d()).epsilon(1e-9));
    }
  }
}

TEST_CASE("C32_ii minus C32_i is the sum of squared products") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 1000; ++k) {
    const Point3 x = test::random_point<3>(rng);
    CHECK(residual<Rational>(id_of("C32_ii"), x) - residual<Rational>(id_of("C32_i"), x) == squares(x));
  }
}

TEST_CASE("residuals are sign-class tensors at the matching level") {
  const TernaryQuartic c32i = residual_tensor(id_of("C32_i"));
  CHECK(c32i == test::boundary_representative().to_tensor());
  CHECK(classify_ternary(c32i).definiteness == Definiteness::PositiveSemidefiniteNotDefinite);

  struct Expect {
    const char* id;
    Rational b;
  };
  const Expect expect[] = {{"C32_ii", rat(2)},    {"C33_i", rat(5, 2)},   {"C33_ii", rat(8, 3)},
                           {"C33_iii", rat(8, 3)}, {"C33_iv", rat(5, 2)}};
  for (const auto& e : expect) {
    CAPTURE(e.id);
    const SignClassTensor s = validate_class(residual_tensor(id_of(e.id)));
    CHECK(s.b == e.b);
    CHECK(classify_ternary(s.to_tensor()).definiteness == Definiteness::PositiveDefinite);
  }
  for (const InequalityId& id : all_inequality_variants()) {
    const ClassVerdict v = classify_ternary(residual_tensor(id));
    CHECK(v.definiteness == (is_strict(id.kind) ? Definiteness::PositiveDefinite
                                                : Definiteness::PositiveSemidefiniteNotDefinite));
  }
}

TEST_CASE("C32_i vanishes exactly on the diagonal line") {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 200; ++k) {
    const Rational t = test::random_rational(rng);
    CHECK(residual<Rational>(id_of("C32_i"), Point3{t, t, t}) == 0);
    CHECK(residual<Rational>(id_of("C32_i+swap12+swap13+swap23"), Point3{t, t, t}) == 0);
  }
}

TEST_CASE("check_inequality on every variant") {
  for (const InequalityId& id : all_inequality_variants()) {
    CAPTURE(to_string(id));
    const InequalityReport r = check_inequality(id, 500, 7);
    CHECK_FALSE(r.violation);
    CHECK(r.oracle_ok);
    CHECK(r.ok());
    CHECK(r.random_points == 500);
    if (is_strict(id.kind)) {
      CHECK(r.oracle_min > 0);
      CHECK(r.equality_points == 0);
    } else {
      CHECK(r.equality_points > 0);
    }
  }
  CHECK(thrown_kind([] { check_inequality(id_of("C33_i"), 0, 1); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("swapping the wrong pair breaks C32") {
  // A single swap on C32_i is not a valid variant; its residual goes negative.
  InequalityId id = id_of("C32_i");
  const TernaryQuartic base = residual_tensor(id);
  // x1^3 x2 <-> x1 x2^3 alone: shift 8 (x1^3 x2 - x1 x2^3) onto the residual.
  bool negative = false;
  std::mt19937_64 rng(31);
  for (int k = 0; k < 2000 && !negative; ++k) {
    const Point3 x = test::random_point<3>(rng);
    const Rational shifted = evaluate<Rational, 3>(base, x) +
                             8 * (x[0] * x[0] * x[0] * x[1] - x[0] * x[1] * x[1] * x[1]);
    negative = sgn(shifted) < 0;
  }
  CHECK(negative);
}

}  // TEST_SUITE
