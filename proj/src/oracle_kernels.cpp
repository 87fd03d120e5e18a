#include "qpd/oracle_kernels.hpp"

#include <cmath>
#include <numbers>

namespace qpd::kernels {

namespace {

template <int Dim>
double dot(const Point<double, Dim>& a, const Point<double, Dim>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < Dim; ++i) s += a[i] * b[i];
  return s;
}

template <int Dim>
Point<double, Dim> normalized(Point<double, Dim> x) {
  const double n = std::sqrt(dot<Dim>(x, x));
  for (auto& v : x) v /= n;
  return x;
}

template <int Dim>
Point<double, Dim> tangential(const Point<double, Dim>& g, const Point<double, Dim>& x) {
  const double radial = dot<Dim>(g, x);
  Point<double, Dim> t{};
  for (std::size_t i = 0; i < Dim; ++i) t[i] = g[i] - radial * x[i];
  return t;
}

template <int Dim>
double weight_scale(const SymmetricQuartic<Dim>& tensor) {
  double s = 0.0;
  for (double w : tensor.float_weights()) s += std::abs(w);
  return s;
}

}  // namespace

template <>
std::vector<Point<double, 2>> hemisphere_seeds<2>(int resolution) {
  const int count = 2 * resolution;
  std::vector<Point<double, 2>> seeds;
  seeds.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const double theta = std::numbers::pi * k / count;
    seeds.push_back({std::cos(theta), std::sin(theta)});
  }
  return seeds;
}

template <>
std::vector<Point<double, 3>> hemisphere_seeds<3>(int resolution) {
  const int azimuths = 2 * resolution;
  std::vector<Point<double, 3>> seeds;
  seeds.reserve(static_cast<std::size_t>(resolution) * static_cast<std::size_t>(azimuths));
  for (int i = 0; i < resolution; ++i) {
    const double polar = 0.5 * std::numbers::pi * (i + 0.5) / resolution;
    const double sp = std::sin(polar);
    const double cp = std::cos(polar);
    for (int j = 0; j < azimuths; ++j) {
      const double az = 2.0 * std::numbers::pi * j / azimuths;
      seeds.push_back({sp * std::cos(az), sp * std::sin(az), cp});
    }
  }
  return seeds;
}

double fast_evaluate(const TernaryQuartic& tensor, const Point<double, 3>& x) {
  const auto& w = tensor.float_weights();
  const double a = x[0], b = x[1], c = x[2];
  const double a2 = a * a, b2 = b * b, c2 = c * c;
  // Horner-free expansion in canonical multi-index order.
  return w[0] * a2 * a2 + w[1] * a2 * a * b + w[2] * a2 * a * c + w[3] * a2 * b2 + w[4] * a2 * b * c +
         w[5] * a2 * c2 + w[6] * a * b2 * b + w[7] * a * b2 * c + w[8] * a * b * c2 + w[9] * a * c2 * c +
         w[10] * b2 * b2 + w[11] * b2 * b * c + w[12] * b2 * c2 + w[13] * b * c2 * c + w[14] * c2 * c2;
}

double fast_evaluate(const BinaryQuartic& tensor, const Point<double, 2>& x) {
  const auto& w = tensor.float_weights();
  const double a = x[0], b = x[1];
  const double a2 = a * a, b2 = b * b;
  return w[0] * a2 * a2 + w[1] * a2 * a * b + w[2] * a2 * b2 + w[3] * a * b2 * b + w[4] * b2 * b2;
}

template <int Dim>
void evaluate_seeds_serial(const SymmetricQuartic<Dim>& tensor, std::span<const Point<double, Dim>> seeds,
                           std::span<double> values) {
  const auto n = static_cast<std::ptrdiff_t>(seeds.size());
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    values[static_cast<std::size_t>(k)] = fast_evaluate(tensor, seeds[static_cast<std::size_t>(k)]);
  }
}

template <int Dim>
void evaluate_seeds_parallel(const SymmetricQuartic<Dim>& tensor, std::span<const Point<double, Dim>> seeds,
                             std::span<double> values) {
  const auto n = static_cast<std::ptrdiff_t>(seeds.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    values[static_cast<std::size_t>(k)] = fast_evaluate(tensor, seeds[static_cast<std::size_t>(k)]);
  }
}

template <int Dim>
Refined<Dim> refine_on_sphere(const SymmetricQuartic<Dim>& tensor, const Point<double, Dim>& start,
                              int max_iters, double grad_tol, std::vector<double>* trace) {
  constexpr double kArmijo = 1e-4;
  Refined<Dim> r;
  Point<double, Dim> x = normalized<Dim>(start);
  double f = fast_evaluate(tensor, x);
  Point<double, Dim> gt = tangential<Dim>(gradient<double, Dim>(tensor, x), x);
  if (trace) trace->push_back(f);

  const double scale = weight_scale(tensor);
  double alpha = scale > 0.0 ? 1.0 / (12.0 * scale) : 1.0;

  int it = 0;
  for (; it < max_iters; ++it) {
    const double gnorm2 = dot<Dim>(gt, gt);
    if (std::sqrt(gnorm2) < grad_tol) {
      r.converged = true;
      break;
    }
    double step = alpha;
    Point<double, Dim> y{};
    double fy = f;
    bool accepted = false;
    while (step * std::sqrt(gnorm2) > 1e-17) {
      for (std::size_t i = 0; i < Dim; ++i) y[i] = x[i] - step * gt[i];
      y = normalized<Dim>(y);
      fy = fast_evaluate(tensor, y);
      if (fy <= f - kArmijo * step * gnorm2) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      // No representable decrease along the gradient: stationary to
      // working precision.
      r.converged = true;
      break;
    }
    const Point<double, Dim> gty = tangential<Dim>(gradient<double, Dim>(tensor, y), y);
    double ss = 0.0, sy = 0.0;
    for (std::size_t i = 0; i < Dim; ++i) {
      const double s = y[i] - x[i];
      ss += s * s;
      sy += s * (gty[i] - gt[i]);
    }
    alpha = sy > 0.0 ? ss / sy : 2.0 * step;
    x = y;
    f = fy;
    gt = gty;
    if (trace) trace->push_back(f);
  }
  r.value = f;
  r.x = x;
  r.iterations = it;
  return r;
}

template <int Dim>
void refine_starts_serial(const SymmetricQuartic<Dim>& tensor, std::span<const Point<double, Dim>> starts,
                          int max_iters, double grad_tol, std::span<Refined<Dim>> out) {
  const auto n = static_cast<std::ptrdiff_t>(starts.size());
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    out[static_cast<std::size_t>(k)] =
        refine_on_sphere<Dim>(tensor, starts[static_cast<std::size_t>(k)], max_iters, grad_tol);
  }
}

template <int Dim>
void refine_starts_parallel(const SymmetricQuartic<Dim>& tensor, std::span<const Point<double, Dim>> starts,
                            int max_iters, double grad_tol, std::span<Refined<Dim>> out) {
  const auto n = static_cast<std::ptrdiff_t>(starts.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    out[static_cast<std::size_t>(k)] =
        refine_on_sphere<Dim>(tensor, starts[static_cast<std::size_t>(k)], max_iters, grad_tol);
  }
}

template void evaluate_seeds_serial<2>(const BinaryQuartic&, std::span<const Point<double, 2>>, std::span<double>);
template void evaluate_seeds_serial<3>(const TernaryQuartic&, std::span<const Point<double, 3>>, std::span<double>);
template void evaluate_seeds_parallel<2>(const BinaryQuartic&, std::span<const Point<double, 2>>, std::span<double>);
template void evaluate_seeds_parallel<3>(const TernaryQuartic&, std::span<const Point<double, 3>>,
                                         std::span<double>);
template Refined<2> refine_on_sphere<2>(const BinaryQuartic&, const Point<double, 2>&, int, double,
                                        std::vector<double>*);
template Refined<3> refine_on_sphere<3>(const TernaryQuartic&, const Point<double, 3>&, int, double,
                                        std::vector<double>*);
template void refine_starts_serial<2>(const BinaryQuartic&, std::span<const Point<double, 2>>, int, double,
                                      std::span<Refined<2>>);
template void refine_starts_serial<3>(const TernaryQuartic&, std::span<const Point<double, 3>>, int, double,
                                      std::span<Refined<3>>);
template void refine_starts_parallel<2>(const BinaryQuartic&, std::span<const Point<double, 2>>, int, double,
                                        std::span<Refined<2>>);
template void refine_starts_parallel<3>(const TernaryQuartic&, std::span<const Point<double, 3>>, int, double,
                                        std::span<Refined<3>>);

}  // namespace qpd::kernels
