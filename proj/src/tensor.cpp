#include "qpd/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "qpd/error.hpp"

namespace qpd {

template <int Dim>
SymmetricQuartic<Dim>::SymmetricQuartic() : SymmetricQuartic(Coefficients{}) {}

template <int Dim>
SymmetricQuartic<Dim>::SymmetricQuartic(Coefficients coefficients) : coefficients_(std::move(coefficients)) {
  const auto& indices = canonical_indices<Dim>();
  for (std::size_t k = 0; k < kTerms; ++k) {
    weights_[k] = indices[k].multiplicity() * coefficients_[k].get_d();
  }
}

BinaryQuartic make_binary(const Rational& t1111, const Rational& t1112, const Rational& t1122,
                          const Rational& t1222, const Rational& t2222) {
  return BinaryQuartic(BinaryQuartic::Coefficients{t1111, t1112, t1122, t1222, t2222});
}

template <int Dim>
SymmetricQuartic<Dim> build_quartic(std::span<const IndexedEntry> entries) {
  using Tensor = SymmetricQuartic<Dim>;
  std::array<std::optional<Rational>, Tensor::kTerms> seen{};
  for (const auto& entry : entries) {
    const MultiIndex index = MultiIndex::from_indices(entry.indices, Dim);
    auto& slot = seen[static_cast<std::size_t>(position_of<Dim>(index))];
    if (slot && *slot != entry.value) {
      throw Error(ErrorKind::ConflictingEntries, "entries for multi-index " + index.key() +
                                                     " disagree: " + to_string(*slot) + " vs " +
                                                     to_string(entry.value));
    }
    slot = entry.value;
  }
  typename Tensor::Coefficients c{};
  for (std::size_t k = 0; k < Tensor::kTerms; ++k) c[k] = seen[k].value_or(Rational(0));
  return Tensor(std::move(c));
}

AnyQuartic build_tensor(int dim, std::span<const IndexedEntry> entries) {
  if (dim == 2) return build_quartic<2>(entries);
  if (dim == 3) return build_quartic<3>(entries);
  throw Error(ErrorKind::BadIndex, "dimension must be 2 or 3, got " + std::to_string(dim));
}

namespace {

template <class T, int Dim>
std::array<std::array<T, 5>, Dim> power_table(const Point<T, Dim>& x) {
  std::array<std::array<T, 5>, Dim> pw{};
  for (std::size_t i = 0; i < Dim; ++i) {
    pw[i][0] = T(1);
    for (std::size_t k = 1; k < 5; ++k) pw[i][k] = pw[i][k - 1] * x[i];
  }
  return pw;
}

template <class T, int Dim>
T weight(const SymmetricQuartic<Dim>& tensor, std::size_t k) {
  if constexpr (std::is_same_v<T, double>) {
    return tensor.float_weights()[k];
  } else {
    return T(tensor.coefficients()[k] * canonical_indices<Dim>()[k].multiplicity());
  }
}

}  // namespace

template <class T, int Dim>
T evaluate(const SymmetricQuartic<Dim>& tensor, const Point<T, Dim>& x) {
  const auto pw = power_table<T, Dim>(x);
  const auto& indices = canonical_indices<Dim>();
  T sum(0);
  for (std::size_t k = 0; k < SymmetricQuartic<Dim>::kTerms; ++k) {
    const auto e = indices[k].exponents();
    T term = weight<T, Dim>(tensor, k);
    for (std::size_t i = 0; i < Dim; ++i) term *= pw[i][static_cast<std::size_t>(e[i])];
    sum += term;
  }
  return sum;
}

template <class T, int Dim>
Point<T, Dim> gradient(const SymmetricQuartic<Dim>& tensor, const Point<T, Dim>& x) {
  const auto pw = power_table<T, Dim>(x);
  const auto& indices = canonical_indices<Dim>();
  Point<T, Dim> g{};
  for (auto& gi : g) gi = T(0);
  for (std::size_t k = 0; k < SymmetricQuartic<Dim>::kTerms; ++k) {
    const auto e = indices[k].exponents();
    const T w = weight<T, Dim>(tensor, k);
    for (std::size_t d = 0; d < Dim; ++d) {
      if (e[d] == 0) continue;
      T term = w * T(e[d]);
      for (std::size_t i = 0; i < Dim; ++i) {
        const int power = i == d ? e[i] - 1 : e[i];
        term *= pw[i][static_cast<std::size_t>(power)];
      }
      g[d] += term;
    }
  }
  return g;
}

namespace {

template <class T>
T evaluate_any(const AnyQuartic& tensor, std::span<const T> x) {
  return std::visit(
      [&](const auto& t) -> T {
        constexpr int Dim = std::decay_t<decltype(t)>::kDim;
        if (x.size() != Dim) {
          throw Error(ErrorKind::DimensionMismatch, "point has " + std::to_string(x.size()) +
                                                        " components, tensor dimension is " +
                                                        std::to_string(Dim));
        }
        Point<T, Dim> p{};
        std::copy(x.begin(), x.end(), p.begin());
        return evaluate<T, Dim>(t, p);
      },
      tensor);
}

template <class T>
std::vector<T> gradient_any(const AnyQuartic& tensor, std::span<const T> x) {
  return std::visit(
      [&](const auto& t) -> std::vector<T> {
        constexpr int Dim = std::decay_t<decltype(t)>::kDim;
        if (x.size() != Dim) {
          throw Error(ErrorKind::DimensionMismatch, "point has " + std::to_string(x.size()) +
                                                        " components, tensor dimension is " +
                                                        std::to_string(Dim));
        }
        Point<T, Dim> p{};
        std::copy(x.begin(), x.end(), p.begin());
        const auto g = gradient<T, Dim>(t, p);
        return std::vector<T>(g.begin(), g.end());
      },
      tensor);
}

}  // namespace

Rational evaluate(const AnyQuartic& tensor, std::span<const Rational> x) { return evaluate_any(tensor, x); }
double evaluate(const AnyQuartic& tensor, std::span<const double> x) { return evaluate_any(tensor, x); }
std::vector<Rational> gradient(const AnyQuartic& tensor, std::span<const Rational> x) {
  return gradient_any(tensor, x);
}
std::vector<double> gradient(const AnyQuartic& tensor, std::span<const double> x) {
  return gradient_any(tensor, x);
}

template <int Dim>
SymmetricQuartic<Dim> scaled(const SymmetricQuartic<Dim>& tensor, const Rational& factor) {
  auto c = tensor.coefficients();
  for (auto& v : c) v *= factor;
  return SymmetricQuartic<Dim>(std::move(c));
}

template <int Dim>
const std::vector<SignedPermutation<Dim>>& all_signed_permutations() {
  static const auto table = [] {
    std::vector<SignedPermutation<Dim>> out;
    std::array<int, Dim> perm{};
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (int mask = 0; mask < (1 << Dim); ++mask) {
        SignedPermutation<Dim> m{perm, {}};
        for (int i = 0; i < Dim; ++i) m.sign[static_cast<std::size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
        out.push_back(m);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }();
  return table;
}

template <int Dim>
SymmetricQuartic<Dim> transform(const SymmetricQuartic<Dim>& tensor, const SignedPermutation<Dim>& m) {
  typename SymmetricQuartic<Dim>::Coefficients c{};
  const auto& indices = canonical_indices<Dim>();
  for (std::size_t k = 0; k < SymmetricQuartic<Dim>::kTerms; ++k) {
    std::array<int, 4> mapped{};
    int s = 1;
    for (int p = 0; p < 4; ++p) {
      const auto axis = static_cast<std::size_t>(indices[k][p] - 1);
      mapped[static_cast<std::size_t>(p)] = m.target[axis] + 1;
      s *= m.sign[axis];
    }
    const Rational& source = tensor[MultiIndex::from_indices(mapped, Dim)];
    c[k] = s > 0 ? source : Rational(-source);
  }
  return SymmetricQuartic<Dim>(std::move(c));
}

template class SymmetricQuartic<2>;
template class SymmetricQuartic<3>;
template SymmetricQuartic<2> build_quartic<2>(std::span<const IndexedEntry>);
template SymmetricQuartic<3> build_quartic<3>(std::span<const IndexedEntry>);
template Rational evaluate<Rational, 2>(const SymmetricQuartic<2>&, const Point<Rational, 2>&);
template Rational evaluate<Rational, 3>(const SymmetricQuartic<3>&, const Point<Rational, 3>&);
template double evaluate<double, 2>(const SymmetricQuartic<2>&, const Point<double, 2>&);
template double evaluate<double, 3>(const SymmetricQuartic<3>&, const Point<double, 3>&);
template Point<Rational, 2> gradient<Rational, 2>(const SymmetricQuartic<2>&, const Point<Rational, 2>&);
template Point<Rational, 3> gradient<Rational, 3>(const SymmetricQuartic<3>&, const Point<Rational, 3>&);
template Point<double, 2> gradient<double, 2>(const SymmetricQuartic<2>&, const Point<double, 2>&);
template Point<double, 3> gradient<double, 3>(const SymmetricQuartic<3>&, const Point<double, 3>&);
template SymmetricQuartic<2> scaled<2>(const SymmetricQuartic<2>&, const Rational&);
template SymmetricQuartic<3> scaled<3>(const SymmetricQuartic<3>&, const Rational&);
template const std::vector<SignedPermutation<2>>& all_signed_permutations<2>();
template const std::vector<SignedPermutation<3>>& all_signed_permutations<3>();
template SymmetricQuartic<2> transform<2>(const SymmetricQuartic<2>&, const SignedPermutation<2>&);
template SymmetricQuartic<3> transform<3>(const SymmetricQuartic<3>&, const SignedPermutation<3>&);

}  // namespace qpd
