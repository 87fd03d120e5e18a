#include "qpd/inequality_suite.hpp"

#include <array>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "qpd/error.hpp"

namespace qpd {

namespace {

/// coefficient * x_i^3 x_j on the right-hand side (0-based i, j).
struct CubicTerm {
  int i;
  int j;
  int coefficient;
};

struct Shape {
  std::array<int, 3> linear;  // signs of L
  int square_weight;          // k
  std::vector<CubicTerm> cubic;
  int mixed;                  // coefficient of x1 x2 x3^2 on the right
};

Shape shape_of(InequalityKind kind) {
  // 8 (x1^3 x2 - x1^3 x3 - x2 x3^3)
  const std::vector<CubicTerm> plus_minus{{0, 1, 8}, {0, 2, -8}, {2, 1, -8}};
  // 8 (x1 x3^3 + x1^3 x2 + x2^3 x3)
  const std::vector<CubicTerm> cyclic{{2, 0, 8}, {0, 1, 8}, {1, 2, 8}};
  switch (kind) {
    case InequalityKind::C32_i: return {{1, 1, -1}, 5, plus_minus, 24};
    case InequalityKind::C32_ii: return {{1, 1, -1}, 6, plus_minus, 24};
    case InequalityKind::C33_i: return {{1, 1, 1}, 9, cyclic, 0};
    case InequalityKind::C33_ii: return {{1, 1, 1}, 10, cyclic, 24};
    case InequalityKind::C33_iii: return {{1, 1, -1}, 10, plus_minus, 24};
    case InequalityKind::C33_iv: return {{1, 1, -1}, 9, plus_minus, 0};
  }
  throw Error(ErrorKind::UnknownId, "unknown inequality kind");
}

CubicTerm exchanged(CubicTerm term, const Exchange& ex) {
  const int lo = std::min(term.i, term.j);
  const int hi = std::max(term.i, term.j);
  const bool swap = (lo == 0 && hi == 1 && ex.swap12) || (lo == 0 && hi == 2 && ex.swap13) ||
                    (lo == 1 && hi == 2 && ex.swap23);
  if (swap) std::swap(term.i, term.j);
  return term;
}

constexpr std::array<std::pair<InequalityKind, std::string_view>, 6> kNames{{
    {InequalityKind::C32_i, "C32_i"},
    {InequalityKind::C32_ii, "C32_ii"},
    {InequalityKind::C33_i, "C33_i"},
    {InequalityKind::C33_ii, "C33_ii"},
    {InequalityKind::C33_iii, "C33_iii"},
    {InequalityKind::C33_iv, "C33_iv"},
}};

bool is_c32(InequalityKind kind) { return kind == InequalityKind::C32_i || kind == InequalityKind::C32_ii; }

}  // namespace

std::string to_string(const InequalityId& id) {
  std::string out;
  for (const auto& [kind, name] : kNames) {
    if (kind == id.kind) out = name;
  }
  if (id.exchange.swap12) out += "+swap12";
  if (id.exchange.swap13) out += "+swap13";
  if (id.exchange.swap23) out += "+swap23";
  return out;
}

InequalityId parse_inequality_id(std::string_view text) {
  const auto plus = text.find('+');
  const std::string_view head = text.substr(0, plus);
  InequalityId id;
  bool found = false;
  for (const auto& [kind, name] : kNames) {
    if (name == head) {
      id.kind = kind;
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::UnknownId, "unknown inequality '" + std::string(text) + "'");
  std::string_view rest = plus == std::string_view::npos ? std::string_view{} : text.substr(plus + 1);
  while (!rest.empty()) {
    const auto next = rest.find('+');
    const std::string_view tok = rest.substr(0, next);
    if (tok == "swap12") id.exchange.swap12 = true;
    else if (tok == "swap13") id.exchange.swap13 = true;
    else if (tok == "swap23") id.exchange.swap23 = true;
    else throw Error(ErrorKind::UnknownId, "unknown exchange '" + std::string(tok) + "'");
    rest = next == std::string_view::npos ? std::string_view{} : rest.substr(next + 1);
  }
  validate(id);
  return id;
}

void validate(const InequalityId& id) {
  shape_of(id.kind);
  const Exchange& ex = id.exchange;
  if (is_c32(id.kind)) {
    if (!ex.none() && !ex.all()) {
      throw Error(ErrorKind::UnknownId, to_string(id) + ": C32 exchanges apply to all three pairs at once");
    }
  } else if (ex.swap12 + ex.swap13 + ex.swap23 > 1) {
    throw Error(ErrorKind::UnknownId, to_string(id) + ": C33 exchanges apply to one pair at a time");
  }
}

bool is_strict(InequalityKind kind) { return kind != InequalityKind::C32_i; }

std::vector<InequalityId> all_inequality_variants() {
  std::vector<InequalityId> out;
  for (const auto& [kind, name] : kNames) {
    out.push_back({kind, {}});
    if (is_c32(kind)) {
      out.push_back({kind, {true, true, true}});
    } else {
      out.push_back({kind, {true, false, false}});
      out.push_back({kind, {false, true, false}});
      out.push_back({kind, {false, false, true}});
    }
  }
  return out;
}

template <class T>
T residual(const InequalityId& id, const Point<T, 3>& x) {
  validate(id);
  const Shape shape = shape_of(id.kind);
  const T lin = T(shape.linear[0]) * x[0] + T(shape.linear[1]) * x[1] + T(shape.linear[2]) * x[2];
  const T lin2 = lin * lin;
  const T sq = x[0] * x[0] * x[1] * x[1] + x[0] * x[0] * x[2] * x[2] + x[1] * x[1] * x[2] * x[2];
  T rhs(0);
  for (const CubicTerm& raw : shape.cubic) {
    const CubicTerm c = exchanged(raw, id.exchange);
    const auto i = static_cast<std::size_t>(c.i);
    const auto j = static_cast<std::size_t>(c.j);
    rhs += T(c.coefficient) * x[i] * x[i] * x[i] * x[j];
  }
  rhs += T(shape.mixed) * x[0] * x[1] * x[2] * x[2];
  return lin2 * lin2 + T(shape.square_weight) * sq - rhs;
}

template Rational residual<Rational>(const InequalityId&, const Point<Rational, 3>&);
template double residual<double>(const InequalityId&, const Point<double, 3>&);

TernaryQuartic residual_tensor(const InequalityId& id) {
  validate(id);
  const Shape shape = shape_of(id.kind);
  // Polynomial coefficients keyed by exponent vector.
  std::map<std::array<int, 3>, Rational> poly;
  constexpr std::array<int, 5> factorial{1, 1, 2, 6, 24};
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; a + b <= 4; ++b) {
      const int c = 4 - a - b;
      int sign = 1;
      if (a % 2) sign *= shape.linear[0];
      if (b % 2) sign *= shape.linear[1];
      if (c % 2) sign *= shape.linear[2];
      poly[{a, b, c}] += sign * 24 / (factorial[static_cast<std::size_t>(a)] * factorial[static_cast<std::size_t>(b)] *
                                      factorial[static_cast<std::size_t>(c)]);
    }
  }
  poly[{2, 2, 0}] += shape.square_weight;
  poly[{2, 0, 2}] += shape.square_weight;
  poly[{0, 2, 2}] += shape.square_weight;
  for (const CubicTerm& raw : shape.cubic) {
    const CubicTerm term = exchanged(raw, id.exchange);
    std::array<int, 3> e{0, 0, 0};
    e[static_cast<std::size_t>(term.i)] += 3;
    e[static_cast<std::size_t>(term.j)] += 1;
    poly[e] -= term.coefficient;
  }
  poly[{1, 1, 2}] -= shape.mixed;

  std::vector<IndexedEntry> entries;
  for (const auto& [e, value] : poly) {
    std::vector<int> tuple;
    for (int axis = 0; axis < 3; ++axis) tuple.insert(tuple.end(), static_cast<std::size_t>(e[static_cast<std::size_t>(axis)]), axis + 1);
    const int mult = MultiIndex::from_indices(tuple, 3).multiplicity();
    Rational t = value / mult;
    entries.push_back({std::move(tuple), t});
  }
  return build_quartic<3>(entries);
}

namespace {

bool on_diagonal_line(const Point3& x) { return x[0] == x[1] && x[1] == x[2]; }

bool is_origin(const Point3& x) { return sgn(x[0]) == 0 && sgn(x[1]) == 0 && sgn(x[2]) == 0; }

/// Nonempty reason if the residual value breaks the inequality at x.
std::string judge(InequalityKind kind, const Point3& x, const Rational& r) {
  if (is_origin(x)) return sgn(r) == 0 ? "" : "nonzero residual at the origin";
  if (sgn(r) < 0) return "negative residual";
  if (is_strict(kind)) return sgn(r) == 0 ? "zero residual at a nonzero point" : "";
  if (on_diagonal_line(x)) return sgn(r) == 0 ? "" : "residual nonzero on x1 = x2 = x3";
  return sgn(r) == 0 ? "equality off the line x1 = x2 = x3" : "";
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-100, 100);
  std::uniform_int_distribution<long> den(1, 100);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

std::vector<Point3> structured_points() {
  std::vector<Point3> pts;
  for (int i = 0; i < 3; ++i) {
    for (int s : {1, -1}) {
      Point3 p{0, 0, 0};
      p[static_cast<std::size_t>(i)] = s;
      pts.push_back(p);
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      for (int s : {1, -1}) {
        Point3 p{0, 0, 0};
        p[static_cast<std::size_t>(i)] = 1;
        p[static_cast<std::size_t>(j)] = s;
        pts.push_back(p);
      }
    }
  }
  pts.push_back({1, 1, 1});
  auto frac = [](long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
  };
  pts.push_back({frac(1, 5), frac(-1, 5), 1});
  pts.push_back({frac(1, 2), frac(-1, 2), 1});
  pts.push_back({frac(1, 4), frac(-1, 4), 1});
  pts.push_back({-1, -3, -1});
  return pts;
}

double angle_to_diagonal(const std::vector<double>& x) {
  const double inv = 1.0 / std::sqrt(3.0);
  const double d = std::abs(inv * (x[0] + x[1] + x[2]));
  return std::acos(std::min(1.0, d));
}

}  // namespace

InequalityReport check_inequality(const InequalityId& id, int samples, std::uint64_t seed, const OracleConfig& cfg) {
  validate(id);
  if (samples < 1) throw Error(ErrorKind::PreconditionViolated, "samples must be >= 1");
  InequalityReport report;
  report.id = id;

  std::mt19937_64 rng(seed);
  std::vector<Point3> points;
  points.reserve(static_cast<std::size_t>(samples));
  while (points.size() < static_cast<std::size_t>(samples)) {
    Point3 p{random_rational(rng), random_rational(rng), random_rational(rng)};
    if (!is_origin(p)) points.push_back(std::move(p));
  }
  report.random_points = samples;
  const auto structured = structured_points();
  report.structured_points = static_cast<int>(structured.size());
  points.insert(points.end(), structured.begin(), structured.end());
  if (id.kind == InequalityKind::C32_i) {
    for (int k = 0; k < 32; ++k) {
      Rational t = random_rational(rng);
      if (sgn(t) == 0) t = 1;
      points.push_back({t, t, t});
      ++report.equality_points;
    }
  }

  std::vector<Rational> values(points.size());
  const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    values[static_cast<std::size_t>(k)] = residual<Rational>(id, points[static_cast<std::size_t>(k)]);
  }
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (auto why = judge(id.kind, points[k], values[k]); !why.empty()) {
      report.violation = Violation{points[k], values[k], why};
      break;
    }
  }

  const OracleResult res = min_on_sphere(residual_tensor(id), cfg);
  report.oracle_min = res.min_value;
  report.oracle_verdict = res.verdict;
  report.oracle_confirmed = res.confirmed_exact;
  std::ostringstream detail;
  if (is_strict(id.kind)) {
    report.oracle_ok = res.verdict == NumericVerdict::PositiveDefinite && res.confirmed_exact &&
                       sgn(*res.confirmed_exact) > 0;
    detail << "sphere min " << res.min_value;
  } else {
    // Every numerically zero local minimum must sit on the diagonal line.
    double worst = 0.0;
    for (const auto& m : res.local_minima) {
      if (m.value <= cfg.verdict_tol) worst = std::max(worst, angle_to_diagonal(m.point));
    }
    report.oracle_ok = res.verdict == NumericVerdict::BoundaryPSD && res.confirmed_exact &&
                       sgn(*res.confirmed_exact) == 0 && worst <= 1e-4;
    detail << "sphere min " << res.min_value << ", zero minima within " << worst << " rad of the diagonal";
  }
  report.oracle_detail = detail.str();
  return report;
}

}  // namespace qpd
