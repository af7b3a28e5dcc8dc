#include <doctest.h>

#include <vector>

#include "ehi/matrixkit.hpp"
#include "support.hpp"

using ehi::cplx;
using ehi::CMat;
using test::rel;

namespace {

// Cofactor expansion, independent of the LU path.
cplx cofactor_det(const CMat& m) {
  const auto n = m.rows();
  if (n == 1) return m(0, 0);
  cplx s = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    CMat sub(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, cc = 0; c < n; ++c)
        if (c != j) sub(r - 1, cc++) = m(r, c);
    s += (j % 2 ? -1.0 : 1.0) * m(0, j) * cofactor_det(sub);
  }
  return s;
}

CMat random_matrix(test::Draws& d, int n, int k) {
  CMat m(n, k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) m(i, j) = cplx(d.uniform(-1, 1), d.uniform(-1, 1));
  return m;
}

}  // namespace

TEST_CASE("LU determinant and condition estimate") {
  test::Draws d(31);
  const CMat m = random_matrix(d, 4, 4);
  const auto r = ehi::determinant(m);
  CHECK(rel(r.value, cofactor_det(m)) < 1e-13);
  CHECK(r.rcond > 0);
  CHECK(r.rcond <= 1);
  CMat sing = m;
  sing.row(3) = sing.row(1);
  CHECK(ehi::determinant(sing).rcond < 1e-14);
  CHECK(ehi::determinant(CMat(0, 0)).value == cplx(1));
}

TEST_CASE("elliptic Cauchy determinant") {
  test::Draws d(32);
  const cplx p(0.3, -0.1);
  for (int n = 1; n <= 3; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<cplx> a(n), z(n);
      for (auto& x : a) x = d.polar(0.4, 1.4);
      for (auto& x : z) x = d.polar(0.4, 1.4);
      CMat m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = a[i] / ehi::theta_pm(a[i], z[j], p);
      // Nearly singular draws measure cancellation, not the identity.
      if (ehi::determinant(m).rcond < 1e-3) continue;
      const auto r = ehi::elliptic_cauchy_det<double>(a, z, p);
      CHECK(r.residual() < 1e-11);
      if (n == 1) CHECK(rel(r.lhs, a[0] / ehi::theta_pm(a[0], z[0], p)) < 1e-15);
      CHECK(rel(r.lhs, cofactor_det(m)) < 1e-12);
    }
  std::vector<cplx> tied{0.5, 0.5}, z{0.7, 0.9};
  CHECK_THROWS_AS(ehi::elliptic_cauchy_det<double>(tied, z, p), ehi::Error);
}

TEST_CASE("minor relation from a left kernel vector") {
  test::Draws d(33);
  // Random 4 x 2 matrix with v constructed in its left kernel: fix v_3, v_4
  // and solve for v_1, v_2.
  const CMat m = random_matrix(d, 4, 2);
  Eigen::VectorXcd v(4);
  v(2) = cplx(0.3, 0.7);
  v(3) = cplx(-1.1, 0.2);
  const Eigen::VectorXcd rhs = -(m.bottomRows(2).transpose() * v.tail(2));
  v.head(2) = m.topRows(2).transpose().partialPivLu().solve(rhs);
  const auto res = ehi::minor_relation_residual(m, v);
  REQUIRE(res.size() == 2);
  for (const auto& r : res) CHECK(r.relative() < 1e-12);
  // k = 1 is the kernel condition itself.
  CHECK(std::abs(res[0].value - cplx((v.transpose() * m.col(0))(0))) < 1e-15);

  // Rank-deficient 3 x 2 with last relation: single-term exclusion.
  CMat s = random_matrix(d, 3, 2);
  s.row(2) = 2.0 * s.row(0) - s.row(1);
  Eigen::VectorXcd w(3);
  w << 2.0, -1.0, -1.0;
  for (const auto& r : ehi::minor_relation_residual(s, w)) CHECK(r.relative() < 1e-12);

  Eigen::VectorXcd bad = v;
  bad(0) += 0.1;
  CHECK_THROWS_AS(ehi::minor_relation_residual(m, bad), ehi::Error);
}

TEST_CASE("colex subsets") {
  const auto s = ehi::colex_subsets(4, 2);
  const std::vector<std::vector<int>> expected{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
  CHECK(s == expected);
  CHECK(ehi::colex_subsets(3, 0).size() == 1);
  CHECK(ehi::colex_subsets(3, 3).size() == 1);
  CHECK(ehi::binomial(5, 2) == 10);
}

TEST_CASE("exterior power determinant") {
  const auto id = ehi::exterior_power_det_check(CMat::Identity(3, 3), 2);
  CHECK(id.lhs == cplx(1));
  CHECK(id.rhs == cplx(1));
  CMat diag = CMat::Zero(2, 2);
  diag(0, 0) = 2;
  diag(1, 1) = 3;
  const auto dg = ehi::exterior_power_det_check(diag, 1);
  CHECK(std::abs(dg.lhs - 6.0) < 1e-15);
  CHECK(std::abs(dg.rhs - 6.0) < 1e-15);
  test::Draws d(34);
  for (int size : {3, 4})
    for (int n = 1; n <= size; ++n) {
      const auto r = ehi::exterior_power_det_check(random_matrix(d, size, size), n);
      CHECK(r.residual() < 1e-12);
    }
  CHECK_THROWS_AS(ehi::exterior_power_det_check(CMat::Identity(5, 5), 2), ehi::Error);
}
