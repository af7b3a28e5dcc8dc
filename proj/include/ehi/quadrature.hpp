#pragma once

// Trapezoidal rule on circles |z| = r for the normalized measure dz/(2 pi i z),
// i.e. the mean of f over equispaced nodes, with node doubling until two
// successive levels agree.

#include <complex>
#include <cstdint>
#include <functional>
#include <span>

namespace ehi {

using cplx = std::complex<double>;

struct Contour {
  double radius = 1.0;
  // Rotation of the node grid. Doubling keeps the old nodes for any fixed
  // phase, so a nonzero phase only moves the grid off special points.
  double phase = 0.0;
};

struct QuadSpec {
  int n0 = 64;
  int n_max = 16384;
  double rel_tol = 1e-11;
  double abs_floor = 1e-300;

  static QuadSpec univariate() { return {}; }
  static QuadSpec tensor() { return {64, 512, 1e-9, 1e-300}; }

  void validate() const;
};

struct QuadResult {
  cplx value{};
  double err_est = 0.0;
  std::int64_t nodes_used = 0;
  bool converged = false;
};

using Integrand = std::function<cplx(cplx)>;
using TensorIntegrand = std::function<cplx(std::span<const cplx>)>;

QuadResult contour_integrate(const Integrand& f, const Contour& contour = {},
                             const QuadSpec& spec = {});

// Full tensor grid with the same N on every axis, n <= 3.
QuadResult tensor_integrate(const TensorIntegrand& f, const Contour& contour, const QuadSpec& spec,
                            int n);

// Same grid for integrands of the form prod_i w(z_i) * c(z_1..z_n); w is
// evaluated once per axis node and c once per grid point.
QuadResult tensor_integrate(const Integrand& w, const TensorIntegrand& c, const Contour& contour,
                            const QuadSpec& spec, int n);

inline constexpr double kContourMargin = 0.02;

// max|t| < r - margin and r + margin < 1/max|t|
bool circle_contour_valid(std::span<const cplx> t, double r = 1.0,
                          double margin = kContourMargin);

// Largest modulus among t, used in diagnostics.
double max_modulus(std::span<const cplx> t);

}  // namespace ehi
