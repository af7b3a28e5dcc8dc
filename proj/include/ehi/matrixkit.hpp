#pragma once

// Small dense determinants: LU with a condition estimate, the elliptic Cauchy
// determinant, minors of kernel-annihilated matrices and exterior powers.

#include <Eigen/Dense>
#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "ehi/error.hpp"
#include "ehi/specfun.hpp"

namespace ehi {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using CMat = Mat<cplx>;
using CVec = Vec<cplx>;

template <typename Scalar>
struct DetResult {
  Scalar value;
  double rcond;  // reciprocal condition estimate in the 1-norm, 1 for 0x0
};

template <typename Derived>
DetResult<typename Derived::Scalar> determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw Error(ErrorKind::invalid_argument, "determinant of non-square matrix");
  if (m.rows() == 0) return {Scalar(1), 1.0};
  Eigen::PartialPivLU<Mat<Scalar>> lu(m.eval());
  const Scalar det = lu.determinant();
  const double rc = det == Scalar(0) ? 0.0 : double(lu.rcond());
  return {det, rc};
}

template <typename Scalar>
struct SidePair {
  Scalar lhs, rhs;

  double residual() const {
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    return scale > 0 ? std::abs(lhs - rhs) / scale : 0.0;
  }
};

// det[ a_i / theta_p(a_i z_j^{+-1}) ] against its product form.
template <typename Real>
SidePair<std::complex<Real>> elliptic_cauchy_det(std::span<const std::complex<Real>> a,
                                                 std::span<const std::complex<Real>> z,
                                                 std::complex<Real> p,
                                                 const TruncationPolicy& policy = {}) {
  using C = std::complex<Real>;
  const auto n = static_cast<Eigen::Index>(a.size());
  if (std::ssize(z) != n) throw Error(ErrorKind::invalid_argument, "Cauchy determinant needs len(a) = len(z)");
  require_untied(a);
  require_untied(z);
  Mat<C> m(n, n);
  C cross(1);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const C th = theta_pm(a[i], z[j], p, policy) / a[i];
      if (std::abs(th) < Real(kPoleDelta))
        throw Error(ErrorKind::pole_proximity, "theta_p(a_i z_j^{+-1}) too close to zero");
      m(i, j) = C(1) / th;
      cross *= th;
    }
  C num(1);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      num *= theta_pm(a[i], a[j], p, policy) / a[i] * theta_pm(z[i], z[j], p, policy) / z[i];
  const Real sign = (n * (n - 1) / 2) % 2 == 0 ? Real(1) : Real(-1);
  return {determinant(m).value, num / (sign * cross)};
}

// For v M = 0 with M of size n x k, each leading block M[:, 0..c) (c = 1..k)
// gives sum_{i >= c-1} v_i det(M rows {0..c-2, i}, cols 0..c-1) = 0. Returns
// one residual per c, relative to the largest term.
template <typename Derived, typename VDerived>
std::vector<SumResidual<double>> minor_relation_residual(const Eigen::MatrixBase<Derived>& m,
                                                         const Eigen::MatrixBase<VDerived>& v,
                                                         double kernel_tol = 1e-10) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows(), k = m.cols();
  if (v.size() != n || n <= k)
    throw Error(ErrorKind::invalid_argument, "minor relation needs an n x k matrix with n > k and len(v) = n");
  for (Eigen::Index c = 0; c < k; ++c) {
    double scale = 0;
    Scalar s(0);
    for (Eigen::Index i = 0; i < n; ++i) {
      s += v(i) * m(i, c);
      scale = std::max(scale, double(std::abs(v(i) * m(i, c))));
    }
    if (std::abs(s) > kernel_tol * scale)
      throw Error(ErrorKind::kernel_violated, "v M is not zero in column " + std::to_string(c + 1));
  }
  std::vector<SumResidual<double>> out;
  for (Eigen::Index c = 1; c <= k; ++c) {
    std::vector<cplx> terms;
    Mat<Scalar> sub(c, c);
    for (Eigen::Index i = c - 1; i < n; ++i) {
      for (Eigen::Index r = 0; r + 1 < c; ++r) sub.row(r) = m.row(r).head(c);
      sub.row(c - 1) = m.row(i).head(c);
      terms.push_back(cplx(v(i) * determinant(sub).value));
    }
    out.push_back(sum_residual<double>(terms));
  }
  return out;
}

// All size-k subsets of {0..n-1} in colexicographic order.
std::vector<std::vector<int>> colex_subsets(int n, int k);

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// n-th exterior power: entry (R, S) is the minor on rows R, columns S.
template <typename Derived>
Mat<typename Derived::Scalar> exterior_power(const Eigen::MatrixBase<Derived>& m, int n) {
  using Scalar = typename Derived::Scalar;
  const int size = static_cast<int>(m.rows());
  const auto sets = colex_subsets(size, n);
  const auto dim = static_cast<Eigen::Index>(sets.size());
  Mat<Scalar> out(dim, dim);
  Mat<Scalar> sub(n, n);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index s = 0; s < dim; ++s) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sub(i, j) = m(sets[r][i], sets[s][j]);
      out(r, s) = determinant(sub).value;
    }
  return out;
}

// det(exterior_power(M, n)) against det(M)^C(N-1, n-1), N = size of M.
template <typename Derived>
SidePair<typename Derived::Scalar> exterior_power_det_check(const Eigen::MatrixBase<Derived>& m,
                                                            int n) {
  if (m.rows() != m.cols() || m.rows() > 4 || n < 1 || n > m.rows())
    throw Error(ErrorKind::cap_exceeded, "exterior power check needs a square matrix of size <= 4 and 1 <= n <= size");
  const int size = static_cast<int>(m.rows());
  const auto lhs = determinant(exterior_power(m, n)).value;
  const auto det = determinant(m).value;
  auto rhs = typename Derived::Scalar(1);
  for (std::int64_t i = 0; i < binomial(size - 1, n - 1); ++i) rhs *= det;
  return {lhs, rhs};
}

}  // namespace ehi
