#ifndef QPD_MULTI_INDEX_HPP
#define QPD_MULTI_INDEX_HPP

#include <array>
#include <compare>
#include <span>
#include <string>
#include <string_view>

namespace qpd {

/// Number of distinct sorted degree-4 multi-indices over {1..dim}.
template <int Dim>
inline constexpr int kQuarticTerms = Dim == 2 ? 5 : 15;

/// A sorted 4-tuple of 1-based axis indices. Two tuples that are
/// permutations of each other produce the same MultiIndex.
class MultiIndex {
 public:
  constexpr MultiIndex() = default;

  /// Sorts `indices`. Throws BadArity unless there are exactly 4 of them
  /// and BadIndex if any lies outside {1..dim}.
  static MultiIndex from_indices(std::span<const int> indices, int dim);

  /// Parses a key such as "1123". Digits must be non-decreasing.
  static MultiIndex parse_key(std::string_view key, int dim);

  int operator[](int k) const { return idx_[static_cast<std::size_t>(k)]; }

  /// "1123" style key.
  std::string key() const;

  /// How many times each axis 1, 2, 3 occurs.
  std::array<int, 3> exponents() const;

  /// 4! / (a1! a2! a3!): number of full index tuples collapsing onto this one.
  int multiplicity() const;

  auto operator<=>(const MultiIndex&) const = default;

 private:
  explicit constexpr MultiIndex(std::array<int, 4> idx) : idx_(idx) {}

  std::array<int, 4> idx_{1, 1, 1, 1};

  template <int Dim>
  friend const std::array<MultiIndex, kQuarticTerms<Dim>>& canonical_indices();
};

/// All sorted multi-indices for the dimension, in lexicographic order
/// (for Dim = 2: 1111, 1112, 1122, 1222, 2222).
template <int Dim>
const std::array<MultiIndex, kQuarticTerms<Dim>>& canonical_indices();

/// Position of `index` inside canonical_indices<Dim>().
template <int Dim>
int position_of(const MultiIndex& index);

}  // namespace qpd

#endif  // QPD_MULTI_INDEX_HPP
