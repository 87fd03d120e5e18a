#include "qpd/multi_index.hpp"

#include <algorithm>

#include "qpd/error.hpp"

namespace qpd {

MultiIndex MultiIndex::from_indices(std::span<const int> indices, int dim) {
  if (indices.size() != 4) {
    throw Error(ErrorKind::BadArity, "expected 4 indices, got " + std::to_string(indices.size()));
  }
  std::array<int, 4> idx{};
  for (std::size_t k = 0; k < 4; ++k) {
    if (indices[k] < 1 || indices[k] > dim) {
      throw Error(ErrorKind::BadIndex, "index " + std::to_string(indices[k]) + " outside {1.." +
                                           std::to_string(dim) + "}");
    }
    idx[k] = indices[k];
  }
  std::sort(idx.begin(), idx.end());
  return MultiIndex(idx);
}

MultiIndex MultiIndex::parse_key(std::string_view key, int dim) {
  if (key.size() != 4) {
    throw Error(ErrorKind::BadArity, "key '" + std::string(key) + "' is not 4 digits");
  }
  std::array<int, 4> idx{};
  for (std::size_t k = 0; k < 4; ++k) {
    const char c = key[k];
    if (c < '0' || c > '9') {
      throw Error(ErrorKind::BadIndex, "key '" + std::string(key) + "' has a non-digit");
    }
    idx[k] = c - '0';
    if (idx[k] < 1 || idx[k] > dim) {
      throw Error(ErrorKind::BadIndex, "key '" + std::string(key) + "' has index outside {1.." +
                                           std::to_string(dim) + "}");
    }
    if (k > 0 && idx[k] < idx[k - 1]) {
      throw Error(ErrorKind::BadIndex, "key '" + std::string(key) + "' digits are not non-decreasing");
    }
  }
  return MultiIndex(idx);
}

std::string MultiIndex::key() const {
  std::string out;
  for (int i : idx_) out.push_back(static_cast<char>('0' + i));
  return out;
}

std::array<int, 3> MultiIndex::exponents() const {
  std::array<int, 3> e{0, 0, 0};
  for (int i : idx_) ++e[static_cast<std::size_t>(i - 1)];
  return e;
}

int MultiIndex::multiplicity() const {
  constexpr std::array<int, 5> factorial{1, 1, 2, 6, 24};
  int denom = 1;
  for (int e : exponents()) denom *= factorial[static_cast<std::size_t>(e)];
  return 24 / denom;
}

template <int Dim>
const std::array<MultiIndex, kQuarticTerms<Dim>>& canonical_indices() {
  static const auto table = [] {
    std::array<MultiIndex, kQuarticTerms<Dim>> out{};
    std::size_t n = 0;
    for (int a = 1; a <= Dim; ++a)
      for (int b = a; b <= Dim; ++b)
        for (int c = b; c <= Dim; ++c)
          for (int d = c; d <= Dim; ++d) out[n++] = MultiIndex({a, b, c, d});
    return out;
  }();
  return table;
}

template <int Dim>
int position_of(const MultiIndex& index) {
  const auto& all = canonical_indices<Dim>();
  auto it = std::lower_bound(all.begin(), all.end(), index);
  if (it == all.end() || *it != index) {
    throw Error(ErrorKind::BadIndex, "multi-index " + index.key() + " not valid in dimension " +
                                         std::to_string(Dim));
  }
  return static_cast<int>(it - all.begin());
}

template const std::array<MultiIndex, kQuarticTerms<2>>& canonical_indices<2>();
template const std::array<MultiIndex, kQuarticTerms<3>>& canonical_indices<3>();
template int position_of<2>(const MultiIndex&);
template int position_of<3>(const MultiIndex&);

}  // namespace qpd
