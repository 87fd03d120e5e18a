#include <doctest.h>

#include "helpers.hpp"
#include "qpd/rational.hpp"
#include "qpd/rewrite_forms.hpp"
#include "qpd/tensor_io.hpp"

using namespace qpd;
using qpd::test::rat;
using qpd::test::thrown_kind;

TEST_SUITE("tensor_core") {

TEST_CASE("rationals parse exactly and print in lowest terms") {
  CHECK(parse_rational("11/6") == rat(11, 6));
  CHECK(parse_rational("-4/6") == rat(-2, 3));
  CHECK(parse_rational("2.5") == rat(5, 2));
  CHECK(parse_rational("2.5e-3") == rat(1, 400));
  CHECK(parse_rational("7") == 7);
  CHECK(to_string(rat(6, 4)) == "3/2");
  CHECK(to_string(rat(4, 2)) == "2");
  CHECK(thrown_kind([] { parse_rational("1/0"); }) == ErrorKind::ParseError);
  CHECK(thrown_kind([] { parse_rational("abc"); }) == ErrorKind::ParseError);
  CHECK(thrown_kind([] { parse_rational(""); }) == ErrorKind::ParseError);
  CHECK(rational_from_decimal(0.1) == rat(1, 10));
  CHECK(rational_from_double(0.5) == rat(1, 2));
}

TEST_CASE("best rational approximation follows continued fractions") {
  CHECK(best_rational_approximation(rational_from_double(0.2), 10) == rat(1, 5));
  CHECK(best_rational_approximation(rational_from_double(3.141592653589793), 1000) == rat(355, 113));
  CHECK(best_rational_approximation(rational_from_double(3.141592653589793), 100) == rat(311, 99));
  CHECK(best_rational_approximation(rat(-7, 3), 2) == rat(-5, 2));
}

TEST_CASE("surd signs are decided exactly") {
  CHECK(sign_of_surd(rat(-3), rat(2), rat(2)) == -1);  // -3 + 2 sqrt 2 < 0
  CHECK(sign_of_surd(rat(-2), rat(1), rat(4)) == 0);
  CHECK(sign_of_surd(rat(3), rat(-2), rat(2)) == 1);
  CHECK(sign_of_surd(rat(0), rat(-1), rat(5)) == -1);
  CHECK(sign_of_surd(rat(5), rat(7), rat(0)) == 1);
}

TEST_CASE("multi-indices are sorted and counted") {
  CHECK(canonical_indices<2>().size() == 5);
  CHECK(canonical_indices<3>().size() == 15);
  const std::vector<int> a{2, 1, 1, 3};
  const std::vector<int> b{1, 3, 1, 2};
  CHECK(MultiIndex::from_indices(a, 3) == MultiIndex::from_indices(b, 3));
  CHECK(MultiIndex::from_indices(a, 3).key() == "1123");
  CHECK(MultiIndex::parse_key("1123", 3).multiplicity() == 12);
  CHECK(MultiIndex::parse_key("1122", 3).multiplicity() == 6);
  CHECK(MultiIndex::parse_key("1112", 2).multiplicity() == 4);
  CHECK(MultiIndex::parse_key("2222", 2).multiplicity() == 1);
  int total = 0;
  for (const auto& m : canonical_indices<3>()) total += m.multiplicity();
  CHECK(total == 81);
  CHECK(thrown_kind([] { MultiIndex::parse_key("2111", 2); }) == ErrorKind::BadIndex);
  CHECK(thrown_kind([] { MultiIndex::parse_key("1113", 2); }) == ErrorKind::BadIndex);
  CHECK(thrown_kind([] {
          const std::vector<int> three{1, 1, 2};
          MultiIndex::from_indices(three, 2);
        }) == ErrorKind::BadArity);
}

TEST_CASE("build_tensor symmetrizes sparse entries") {
  const std::vector<IndexedEntry> entries{
      {{1, 1, 1, 1}, 1}, {{2, 2, 2, 2}, 1}, {{1, 1, 2, 2}, 1}, {{1, 1, 1, 2}, 1}, {{1, 2, 2, 2}, -1}};
  const AnyQuartic t = build_tensor(2, entries);
  CHECK(std::get<BinaryQuartic>(t) == make_binary(1, 1, 1, -1, 1));

  const AnyQuartic empty = build_tensor(3, std::vector<IndexedEntry>{});
  for (const auto& c : std::get<TernaryQuartic>(empty).coefficients()) CHECK(c == 0);

  const std::vector<IndexedEntry> conflicting{{{1, 2, 1, 1}, 5}, {{1, 1, 1, 2}, 3}};
  CHECK(thrown_kind([&] { build_tensor(2, conflicting); }) == ErrorKind::ConflictingEntries);
  const std::vector<IndexedEntry> agreeing{{{1, 2, 1, 1}, 3}, {{1, 1, 1, 2}, 3}};
  CHECK(std::get<BinaryQuartic>(build_tensor(2, agreeing)).t("1112") == 3);
  const std::vector<IndexedEntry> bad_index{{{1, 1, 1, 3}, 1}};
  CHECK(thrown_kind([&] { build_tensor(2, bad_index); }) == ErrorKind::BadIndex);
  const std::vector<IndexedEntry> bad_arity{{{1, 1, 1}, 1}};
  CHECK(thrown_kind([&] { build_tensor(3, bad_arity); }) == ErrorKind::BadArity);
  CHECK(thrown_kind([&] { build_tensor(4, agreeing); }) == ErrorKind::BadIndex);
}

TEST_CASE("binary evaluation matches the expanded polynomial") {
  // t1111 x^4 + 4 t1112 x^3 y + 6 t1122 x^2 y^2 + 4 t1222 x y^3 + t2222 y^4
  const BinaryQuartic t = make_binary(2, -1, rat(1, 3), 5, 7);
  const Point2 x{3, -2};
  const Rational expected = Rational(2 * 81) + 4 * (-1) * 27 * (-2) + 6 * rat(1, 3) * 9 * 4 + 4 * 5 * 3 * (-8) + 7 * 16;
  CHECK(evaluate<Rational, 2>(t, x) == expected);
  CHECK(evaluate<Rational, 2>(t, x) == test::brute_evaluate<2>(t, x));
  CHECK(evaluate<Rational, 2>(make_binary(1, 1, -1, 1, 1), Point2{1, -1}) == -12);
}

TEST_CASE("ternary evaluation reproduces the counterexample values") {
  const TernaryQuartic case1 = SignClassTensor{1, 1, -1, -1, -1, 1, rat(11, 6)}.to_tensor();
  CHECK(evaluate<Rational, 3>(case1, Point3{rat(1, 5), rat(-1, 5), 1}) == rat(-72, 625));
  const TernaryQuartic case4 = SignClassTensor{1, 1, -1, -1, -1, -1, rat(2)}.to_tensor();
  CHECK(evaluate<Rational, 3>(case4, Point3{-1, -3, -1}) == -61);
  CHECK(evaluate<Rational, 3>(case4, Point3{0, 0, 0}) == 0);
}

TEST_CASE("gradient examples") {
  const BinaryQuartic x4 = make_binary(1, 0, 0, 0, 0);
  CHECK(gradient<Rational, 2>(x4, Point2{2, 5}) == Point2{32, 0});
  std::mt19937_64 rng(3);
  const auto t = test::random_quartic<3>(rng);
  CHECK(gradient<Rational, 3>(t, Point3{0, 0, 0}) == Point3{0, 0, 0});
}

TEST_CASE("runtime dimension checks") {
  const AnyQuartic t = make_binary(1, 0, 0, 0, 1);
  const std::vector<Rational> three{1, 2, 3};
  const std::vector<double> three_d{1, 2, 3};
  CHECK(thrown_kind([&] { evaluate(t, three); }) == ErrorKind::DimensionMismatch);
  CHECK(thrown_kind([&] { evaluate(t, three_d); }) == ErrorKind::DimensionMismatch);
  CHECK(thrown_kind([&] { gradient(t, three); }) == ErrorKind::DimensionMismatch);
  const std::vector<Rational> two{1, 2};
  CHECK(evaluate(t, two) == 17);
}

TEST_CASE("rewrite_forms examples") {
  const TernaryQuartic plus = SignClassTensor{1, 1, 1, 1, 1, 1, rat(2)}.to_tensor();
  const Point3 ones{1, 1, 1};
  for (const Rational& v : rewrite_forms<Rational>(plus, ones)) CHECK(v == evaluate<Rational, 3>(plus, ones));
  for (const Rational& v : rewrite_forms<Rational>(plus, Point3{0, 0, 0})) CHECK(v == 0);

  const TernaryQuartic boundary = test::boundary_representative().to_tensor();
  const double s = 1.0 / std::sqrt(3.0);
  for (double v : rewrite_forms<double>(boundary, Point<double, 3>{s, s, s})) CHECK(std::abs(v) <= 1e-12);

  const TernaryQuartic outside;
  CHECK(thrown_kind([&] { rewrite_forms<Rational>(outside, ones); }) == ErrorKind::NotInClass);
}

TEST_CASE("tensor files") {
  const AnyQuartic t = parse_tensor_json(R"({"dim": 3, "order": 4, "entries": {"1111": 1, "1123": "11/6", "2233": 0.5}})");
  const auto& q = std::get<TernaryQuartic>(t);
  CHECK(q.t("1111") == 1);
  CHECK(q.t("1123") == rat(11, 6));
  CHECK(q.t("2233") == rat(1, 2));
  CHECK(q.t("3333") == 0);
  CHECK(parse_tensor_json(tensor_to_json(t)) == t);
  CHECK(tensor_to_json(parse_tensor_json(tensor_to_json(t))) == tensor_to_json(t));

  const char* bad[] = {
      R"({"dim": 3, "order": 4, "entries": {}, "extra": 1})",
      R"({"dim": 4, "order": 4, "entries": {}})",
      R"({"dim": 2, "order": 3, "entries": {}})",
      R"({"dim": 2, "order": 4, "entries": {"2111": 1}})",
      R"({"dim": 2, "order": 4, "entries": {"111": 1}})",
      R"({"dim": 2, "order": 4, "entries": {"1111": "1/0"}})",
      R"({"dim": 2, "order": 4, "entries": {"1111": true}})",
      R"({"dim": 2, "order": 4, "entries": )",
      R"({"order": 4, "entries": {}})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK(thrown_kind([&] { parse_tensor_json(text); }) == ErrorKind::ParseError);
  }
}

}  // TEST_SUITE
