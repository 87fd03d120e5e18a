#ifndef QPD_REWRITE_FORMS_HPP
#define QPD_REWRITE_FORMS_HPP

#include <array>

#include "qpd/tensor.hpp"

namespace qpd {

/// The sign vectors of the four linear forms, in order:
/// x1+x2+x3, x1+x2-x3, x1-x2+x3, -x1+x2+x3.
inline constexpr std::array<std::array<int, 3>, 4> kRewriteSigns{{{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {-1, 1, 1}}};

/// Tx^4 written four ways around L = s1 x1 + s2 x2 + s3 x3:
///
///   L^4 + 4 sum_{i!=j} (t_iiij - s_i s_j) x_i^3 x_j
///       + 6 sum_{i<j} (t_iijj - 1) x_i^2 x_j^2
///       + 12 sum_i (t_iijk - s_j s_k) x_i^2 x_j x_k
///
/// for each sign vector in kRewriteSigns. All four equal Tx^4. Throws
/// NotInClass for tensors outside the sign class.
template <class T>
std::array<T, 4> rewrite_forms(const TernaryQuartic& tensor, const Point<T, 3>& x);

}  // namespace qpd

#endif  // QPD_REWRITE_FORMS_HPP
