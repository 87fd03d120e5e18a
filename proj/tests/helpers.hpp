#ifndef QPD_TESTS_HELPERS_HPP
#define QPD_TESTS_HELPERS_HPP

#include <optional>
#include <random>
#include <vector>

#include "qpd/error.hpp"
#include "qpd/tensor.hpp"
#include "qpd/ternary_classifier.hpp"

namespace qpd::test {

/// The ErrorKind thrown by f, or nothing.
template <class F>
std::optional<ErrorKind> thrown_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline Rational rat(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// Uniform rational with numerator in [-lim, lim] and denominator in [1, den].
inline Rational random_rational(std::mt19937_64& rng, long lim = 100, long den = 100) {
  std::uniform_int_distribution<long> n(-lim, lim);
  std::uniform_int_distribution<long> d(1, den);
  return rat(n(rng), d(rng));
}

template <int Dim>
Point<Rational, Dim> random_point(std::mt19937_64& rng, long lim = 100, long den = 100) {
  Point<Rational, Dim> x;
  for (auto& c : x) c = random_rational(rng, lim, den);
  return x;
}

template <int Dim>
SymmetricQuartic<Dim> random_quartic(std::mt19937_64& rng, long lim = 10, long den = 10) {
  typename SymmetricQuartic<Dim>::Coefficients c;
  for (auto& v : c) v = random_rational(rng, lim, den);
  return SymmetricQuartic<Dim>(c);
}

template <int Dim>
Point<double, Dim> to_double(const Point<Rational, Dim>& x) {
  Point<double, Dim> out{};
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i].get_d();
  return out;
}

/// Straight sum over all Dim^4 index tuples, the textbook definition.
template <int Dim>
Rational brute_evaluate(const SymmetricQuartic<Dim>& t, const Point<Rational, Dim>& x) {
  Rational sum = 0;
  for (int i = 0; i < Dim; ++i)
    for (int j = 0; j < Dim; ++j)
      for (int k = 0; k < Dim; ++k)
        for (int l = 0; l < Dim; ++l) {
          const std::vector<int> idx{i + 1, j + 1, k + 1, l + 1};
          const auto ui = [](int v) { return static_cast<std::size_t>(v); };
          sum += t[MultiIndex::from_indices(idx, Dim)] * x[ui(i)] * x[ui(j)] * x[ui(k)] * x[ui(l)];
        }
  return sum;
}

/// The representative tensor used by the sufficiency argument at b = 11/6:
/// t1222 = t2333 = t1113 = 1 and t1123 = t1223 = t1233 = -1.
inline SignClassTensor boundary_representative(const Rational& b = rat(11, 6)) {
  return {-1, 1, -1, -1, -1, -1, b};
}

}  // namespace qpd::test

#endif  // QPD_TESTS_HELPERS_HPP
