#ifndef QPD_TENSOR_HPP
#define QPD_TENSOR_HPP

#include <array>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "qpd/multi_index.hpp"
#include "qpd/rational.hpp"

namespace qpd {

template <class T, int Dim>
using Point = std::array<T, Dim>;

using Point2 = Point<Rational, 2>;
using Point3 = Point<Rational, 3>;

/// A 4th-order symmetric tensor in dimension 2 or 3, stored by sorted
/// multi-index. Coefficients are exact; a double copy pre-multiplied by the
/// multinomial multiplicity backs float-mode evaluation.
template <int Dim>
class SymmetricQuartic {
  static_assert(Dim == 2 || Dim == 3);

 public:
  static constexpr int kDim = Dim;
  static constexpr int kTerms = kQuarticTerms<Dim>;
  using Coefficients = std::array<Rational, kTerms>;

  SymmetricQuartic();
  explicit SymmetricQuartic(Coefficients coefficients);

  const Rational& operator[](const MultiIndex& index) const {
    return coefficients_[static_cast<std::size_t>(position_of<Dim>(index))];
  }
  /// Coefficient by key, e.g. t("1123").
  const Rational& t(std::string_view key) const { return (*this)[MultiIndex::parse_key(key, Dim)]; }

  const Coefficients& coefficients() const { return coefficients_; }

  /// multiplicity(alpha) * t_alpha as doubles, canonical order.
  const std::array<double, kTerms>& float_weights() const { return weights_; }

  bool operator==(const SymmetricQuartic& other) const { return coefficients_ == other.coefficients_; }

 private:
  Coefficients coefficients_;
  std::array<double, kTerms> weights_{};
};

using BinaryQuartic = SymmetricQuartic<2>;
using TernaryQuartic = SymmetricQuartic<3>;
using AnyQuartic = std::variant<BinaryQuartic, TernaryQuartic>;

inline int dimension_of(const AnyQuartic& t) { return t.index() == 0 ? 2 : 3; }

/// (t1111, t1112, t1122, t1222, t2222).
BinaryQuartic make_binary(const Rational& t1111, const Rational& t1112, const Rational& t1122,
                          const Rational& t1222, const Rational& t2222);

/// One user-supplied entry: an unsorted index tuple and its value.
struct IndexedEntry {
  std::vector<int> indices;
  Rational value;
};

/// Symmetrizes sparse entries; missing multi-indices are zero. Throws
/// ConflictingEntries, BadIndex or BadArity.
template <int Dim>
SymmetricQuartic<Dim> build_quartic(std::span<const IndexedEntry> entries);

/// Runtime-dimension form. Throws BadIndex for dim outside {2, 3}.
AnyQuartic build_tensor(int dim, std::span<const IndexedEntry> entries);

/// Tx^4 = sum over multi-indices of multiplicity * t * monomial.
template <class T, int Dim>
T evaluate(const SymmetricQuartic<Dim>& tensor, const Point<T, Dim>& x);

/// Gradient of x -> Tx^4.
template <class T, int Dim>
Point<T, Dim> gradient(const SymmetricQuartic<Dim>& tensor, const Point<T, Dim>& x);

/// Runtime-dimension evaluation; throws DimensionMismatch.
Rational evaluate(const AnyQuartic& tensor, std::span<const Rational> x);
double evaluate(const AnyQuartic& tensor, std::span<const double> x);
std::vector<Rational> gradient(const AnyQuartic& tensor, std::span<const Rational> x);
std::vector<double> gradient(const AnyQuartic& tensor, std::span<const double> x);

template <int Dim>
SymmetricQuartic<Dim> scaled(const SymmetricQuartic<Dim>& tensor, const Rational& factor);

/// x -> Mx where (Mx)[target[i]] = sign[i] * x[i]; zero-based targets.
template <int Dim>
struct SignedPermutation {
  std::array<int, Dim> target;
  std::array<int, Dim> sign;

  template <class T>
  Point<T, Dim> apply(const Point<T, Dim>& x) const {
    Point<T, Dim> y{};
    for (std::size_t i = 0; i < Dim; ++i) {
      y[static_cast<std::size_t>(target[i])] = sign[i] < 0 ? T(-x[i]) : x[i];
    }
    return y;
  }
};

/// All 2^Dim * Dim! signed permutations, permutations in lexicographic
/// order, sign vectors (+,+,+) first.
template <int Dim>
const std::vector<SignedPermutation<Dim>>& all_signed_permutations();

/// The tensor T' with T'x^4 = T(Mx)^4.
template <int Dim>
SymmetricQuartic<Dim> transform(const SymmetricQuartic<Dim>& tensor, const SignedPermutation<Dim>& m);

}  // namespace qpd

#endif  // QPD_TENSOR_HPP
