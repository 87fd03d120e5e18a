#ifndef QPD_ORACLE_KERNELS_HPP
#define QPD_ORACLE_KERNELS_HPP

#include <span>
#include <vector>

#include "qpd/tensor.hpp"

// Data-parallel inner loops of the sphere oracle. Each kernel has an
// OpenMP version and a serial reference; both write results by index so
// the outputs are identical regardless of thread count.
namespace qpd::kernels {

/// Unit seeds on the closed upper half circle (Dim = 2, 2*resolution
/// angles in [0, pi)) or upper hemisphere (Dim = 3, resolution polar x
/// 2*resolution azimuthal cell centres). Tx^4 is even, so this covers every
/// direction up to sign.
template <int Dim>
std::vector<Point<double, Dim>> hemisphere_seeds(int resolution);

/// Float-mode Tx^4 from the pre-multiplied weights.
double fast_evaluate(const TernaryQuartic& tensor, const Point<double, 3>& x);
double fast_evaluate(const BinaryQuartic& tensor, const Point<double, 2>& x);

template <int Dim>
void evaluate_seeds_serial(const SymmetricQuartic<Dim>& tensor, std::span<const Point<double, Dim>> seeds,
                           std::span<double> values);

template <int Dim>
void evaluate_seeds_parallel(const SymmetricQuartic<Dim>& tensor, std::span<const Point<double, Dim>> seeds,
                             std::span<double> values);

template <int Dim>
struct Refined {
  double value = 0.0;
  Point<double, Dim> x{};
  int iterations = 0;
  bool converged = false;
};

/// Projected gradient descent on the sphere with Armijo backtracking and a
/// Barzilai-Borwein trial step. Accepted steps never increase the
/// objective. If `trace` is non-null it receives the objective after every
/// accepted step, starting with the initial value.
template <int Dim>
Refined<Dim> refine_on_sphere(const SymmetricQuartic<Dim>& tensor, const Point<double, Dim>& start,
                              int max_iters, double grad_tol, std::vector<double>* trace = nullptr);

template <int Dim>
void refine_starts_serial(const SymmetricQuartic<Dim>& tensor, std::span<const Point<double, Dim>> starts,
                          int max_iters, double grad_tol, std::span<Refined<Dim>> out);

template <int Dim>
void refine_starts_parallel(const SymmetricQuartic<Dim>& tensor, std::span<const Point<double, Dim>> starts,
                            int max_iters, double grad_tol, std::span<Refined<Dim>> out);

}  // namespace qpd::kernels

#endif  // QPD_ORACLE_KERNELS_HPP
