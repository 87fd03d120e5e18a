#include "qpd/rewrite_forms.hpp"

#include "qpd/ternary_classifier.hpp"

namespace qpd {

namespace {

template <class T>
T as(const Rational& r) {
  if constexpr (std::is_same_v<T, double>) {
    return r.get_d();
  } else {
    return r;
  }
}

}  // namespace

template <class T>
std::array<T, 4> rewrite_forms(const TernaryQuartic& tensor, const Point<T, 3>& x) {
  validate_class(tensor);
  const T& x1 = x[0];
  const T& x2 = x[1];
  const T& x3 = x[2];
  auto coef = [&](const char* key) { return as<T>(tensor.t(key)); };

  std::array<T, 4> out{};
  for (std::size_t f = 0; f < kRewriteSigns.size(); ++f) {
    const auto& s = kRewriteSigns[f];
    const T lin = T(s[0]) * x1 + T(s[1]) * x2 + T(s[2]) * x3;
    const T lin2 = lin * lin;
    T value = lin2 * lin2;

    // x_i^3 x_j terms: the L^4 expansion contributes s_i s_j.
    value += T(4) * ((coef("1112") - T(s[0] * s[1])) * x1 * x1 * x1 * x2 +
                     (coef("1222") - T(s[0] * s[1])) * x1 * x2 * x2 * x2 +
                     (coef("1113") - T(s[0] * s[2])) * x1 * x1 * x1 * x3 +
                     (coef("1333") - T(s[0] * s[2])) * x1 * x3 * x3 * x3 +
                     (coef("2223") - T(s[1] * s[2])) * x2 * x2 * x2 * x3 +
                     (coef("2333") - T(s[1] * s[2])) * x2 * x3 * x3 * x3);
    value += T(6) * ((coef("1122") - T(1)) * x1 * x1 * x2 * x2 + (coef("1133") - T(1)) * x1 * x1 * x3 * x3 +
                     (coef("2233") - T(1)) * x2 * x2 * x3 * x3);
    value += T(12) * ((coef("1123") - T(s[1] * s[2])) * x1 * x1 * x2 * x3 +
                      (coef("1223") - T(s[0] * s[2])) * x1 * x2 * x2 * x3 +
                      (coef("1233") - T(s[0] * s[1])) * x1 * x2 * x3 * x3);
    out[f] = value;
  }
  return out;
}

template std::array<Rational, 4> rewrite_forms<Rational>(const TernaryQuartic&, const Point<Rational, 3>&);
template std::array<double, 4> rewrite_forms<double>(const TernaryQuartic&, const Point<double, 3>&);

}  // namespace qpd
