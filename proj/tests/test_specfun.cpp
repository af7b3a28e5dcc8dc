#include <doctest.h>

#include <vector>

#include "ehi/specfun.hpp"
#include "support.hpp"

using ehi::BasePair;
using ehi::cplx;
using test::rel;

namespace {

// Plain loop in long double until the partial products stop moving.
std::complex<long double> naive_poch(std::complex<long double> z, std::complex<long double> p) {
  std::complex<long double> r = 1, w = z;
  for (int k = 0; k < 2000; ++k) {
    const auto next = r * (1.0L - w);
    if (next == r) break;
    r = next;
    w *= p;
  }
  return r;
}

// Double product summed over a fixed square window, independent of the
// library's truncation logic.
cplx naive_gamma(cplx z, cplx p, cplx q) {
  std::complex<long double> num = 1, den = 1;
  const std::complex<long double> zz(z), pp(p), qq(q);
  std::complex<long double> pj = 1;
  for (int j = 0; j < 90; ++j) {
    std::complex<long double> qk = 1;
    for (int k = 0; k < 90; ++k) {
      num *= 1.0L - pp * qq * pj * qk / zz;
      den *= 1.0L - zz * pj * qk;
      qk *= qq;
    }
    pj *= pp;
  }
  return cplx(num / den);
}

}  // namespace

TEST_CASE("q-Pochhammer basics") {
  CHECK(ehi::qpochhammer_inf(cplx(0), cplx(0.3, 0.2)) == cplx(1));
  CHECK(ehi::qpochhammer_inf(cplx(0), cplx(0)) == cplx(1));
  const cplx v = ehi::qpochhammer_inf(cplx(0.5), cplx(0.3));
  CHECK(rel(v, cplx(naive_poch(0.5L, 0.3L))) < 1e-15);
  const cplx w = ehi::qpochhammer_inf(cplx(0.7, -0.4), cplx(-0.2, 0.35));
  CHECK(rel(w, cplx(naive_poch({0.7L, -0.4L}, {-0.2L, 0.35L}))) < 1e-15);
  CHECK_THROWS_AS(ehi::qpochhammer_inf(cplx(0.5), cplx(1.0)), ehi::Error);
}

TEST_CASE("truncation cap is reported") {
  ehi::TruncationPolicy tight{1e-17, 8};
  const auto r = ehi::qpochhammer_inf_ex(cplx(0.9), cplx(0.9), tight);
  CHECK(r.cap_hit);
  CHECK(r.terms == 8);
  const auto ok = ehi::qpochhammer_inf_ex(cplx(0.5), cplx(0.1));
  CHECK_FALSE(ok.cap_hit);
}

TEST_CASE("truncation policy validation") {
  CHECK_THROWS(ehi::TruncationPolicy{1e-5, 512}.validate());
  CHECK_THROWS(ehi::TruncationPolicy{1e-17, 4}.validate());
  CHECK_NOTHROW(ehi::TruncationPolicy{}.validate());
}

TEST_CASE("base pair domain") {
  CHECK_THROWS_AS(BasePair(cplx(1.0), cplx(0.2)), ehi::Error);
  CHECK_THROWS_AS(BasePair(cplx(0.2), cplx(0, -1.2)), ehi::Error);
  CHECK(BasePair(cplx(0.2), cplx(0.3)).generic());
  CHECK_FALSE(BasePair(cplx(0.3, 0.1), cplx(0.3, 0.1)).generic());
}

TEST_CASE("theta zeros and functional equations") {
  const cplx p(0.3, 0.1);
  CHECK(ehi::theta(cplx(1), p) == cplx(0));
  CHECK_THROWS_AS(ehi::theta(cplx(0), p), ehi::Error);
  test::Draws d(11);
  for (int i = 0; i < 50; ++i) {
    const cplx pp = d.polar(0.15, 0.4);
    const cplx z = d.polar(0.3, 2.0);
    const cplx th = ehi::theta(z, pp);
    CHECK(rel(ehi::theta(pp * z, pp), -th / z) < 1e-13);
    CHECK(rel(ehi::theta(1.0 / z, pp), -th / z) < 1e-13);
  }
}

TEST_CASE("theta product conventions") {
  const cplx p(0.25, -0.1), a1(0.4, 0.3), a2(-0.8, 0.5), t(0.6, 0.2), z(0.9, -0.3);
  CHECK(rel(ehi::theta_product({a1, a2}, p), ehi::theta(a1, p) * ehi::theta(a2, p)) < 1e-15);
  CHECK(rel(ehi::theta_compound({ehi::pm(t, z)}, p), ehi::theta(t * z, p) * ehi::theta(t / z, p)) <
        1e-15);
  CHECK(ehi::theta_compound({ehi::pm(t, t)}, p) == cplx(0));
}

TEST_CASE("elliptic gamma against an independent product") {
  test::Draws d(3);
  for (int i = 0; i < 10; ++i) {
    const BasePair b(d.polar(0.15, 0.4), d.polar(0.15, 0.4));
    const cplx z = d.polar(0.2, 1.5);
    CHECK(rel(ehi::elliptic_gamma(z, b), naive_gamma(z, b.p(), b.q())) < 1e-13);
  }
}

TEST_CASE("elliptic gamma functional equations") {
  test::Draws d(5);
  for (int i = 0; i < 50; ++i) {
    const BasePair b(d.polar(0.15, 0.4), d.polar(0.15, 0.4));
    const cplx z = d.polar(0.3, 1.5);
    const cplx g = ehi::elliptic_gamma(z, b);
    CHECK(rel(ehi::elliptic_gamma(b.q() * z, b), ehi::theta(z, b.p()) * g) < 1e-12);
    CHECK(rel(ehi::elliptic_gamma(b.p() * z, b), ehi::theta(z, b.q()) * g) < 1e-12);
    CHECK(std::abs(g * ehi::elliptic_gamma(b.pq() / z, b) - 1.0) < 1e-12);
    CHECK(rel(ehi::elliptic_gamma(z, b.swapped()), g) < 1e-13);
  }
}

TEST_CASE("elliptic gamma poles are guarded") {
  const BasePair b(cplx(0.3, 0.1), cplx(0.2, -0.2));
  CHECK_THROWS_AS(ehi::elliptic_gamma(cplx(1.0), b), ehi::Error);
  CHECK_THROWS_AS(ehi::elliptic_gamma(1.0 / b.p() * (1.0 + 1e-9), b), ehi::Error);
  CHECK_THROWS_AS(ehi::elliptic_gamma(cplx(0), b), ehi::Error);
  try {
    ehi::elliptic_gamma(1.0 / (b.q() * b.q()), b);
  } catch (const ehi::Error& e) {
    CHECK(e.kind() == ehi::ErrorKind::pole_proximity);
  }
}

TEST_CASE("gamma compound conventions") {
  const BasePair b(cplx(0.3, 0.1), cplx(0.2, -0.2));
  const cplx t(0.5, 0.1), z1(0.9, 0.2), z2(1.1, -0.3);
  const cplx four = ehi::elliptic_gamma(t * z1 * z2, b) * ehi::elliptic_gamma(t * z1 / z2, b) *
                    ehi::elliptic_gamma(t / z1 * z2, b) * ehi::elliptic_gamma(t / z1 / z2, b);
  CHECK(rel(ehi::gamma_compound({ehi::pm(t, z1, z2)}, b), four) < 1e-15);
  // t z = t/z = sqrt(pq): each factor pairs with its reflection.
  const cplx s = std::sqrt(b.pq());
  CHECK(std::abs(ehi::gamma_compound({ehi::pm(s, cplx(1))}, b) - 1.0) < 1e-13);
  std::vector<cplx> six{0.3, {0.1, 0.4}, {-0.5, 0.2}, {0.2, -0.6}, 0.7, {0.1, 0.1}};
  cplx loop = 1;
  for (auto x : six) loop *= ehi::elliptic_gamma(x, b);
  CHECK(rel(ehi::gamma_product<double>(six, b), loop) == 0.0);
}

TEST_CASE("halving the truncation cutoff barely moves values") {
  const BasePair b(cplx(0.35, 0.1), cplx(-0.3, 0.2));
  ehi::TruncationPolicy fine{0.5e-17, 512};
  for (cplx z : {cplx(0.4, 0.3), cplx(-1.2, 0.5), cplx(0.05, -0.9)}) {
    CHECK(rel(ehi::elliptic_gamma(z, b, fine), ehi::elliptic_gamma(z, b)) < 1e-15);
    CHECK(rel(ehi::theta(z, b.p(), fine), ehi::theta(z, b.p())) < 1e-15);
  }
}

TEST_CASE("theta addition formula") {
  const cplx p(0.3, 0.1);
  const cplx t1(0.6, 0.2), t3(-0.4, 0.7), z(1.1, -0.2);
  CHECK(ehi::theta_addition_residual(t1, t1, t3, z, p).relative() < 1e-13);
  CHECK(ehi::theta_addition_residual(t1, cplx(0.2, -0.5), t3, t1, p).relative() < 1e-13);
  test::Draws d(7);
  for (int i = 0; i < 50; ++i) {
    const auto r = ehi::theta_addition_residual(d.polar(0.3, 1.5), d.polar(0.3, 1.5),
                                                d.polar(0.3, 1.5), d.polar(0.3, 1.5),
                                                d.polar(0.15, 0.4));
    CHECK(r.relative() < 1e-12);
  }
}

TEST_CASE("recurrence kernel relation") {
  const cplx p(-0.25, 0.2);
  std::vector<cplx> t2{{0.5, 0.1}, {-0.3, 0.6}};
  CHECK(ehi::recurrence1_kernel_residual<double>(t2, {}, p).relative() < 1e-13);
  std::vector<cplx> t3{{0.5, 0.1}, {-0.3, 0.6}, {0.9, -0.4}}, z1{t3[0]};
  const auto r = ehi::recurrence1_kernel_residual<double>(t3, z1, p);
  CHECK(r.relative() < 1e-13);
  test::Draws d(9);
  std::vector<cplx> t4(4), z2(2);
  for (auto& x : t4) x = d.polar(0.3, 1.5);
  for (auto& x : z2) x = d.polar(0.3, 1.5);
  CHECK(ehi::recurrence1_kernel_residual<double>(t4, z2, p).relative() < 1e-12);
  std::vector<cplx> tied{{0.5, 0.1}, {0.5, 0.1001}, {0.2, 0.2}};
  CHECK_THROWS_AS(ehi::recurrence1_kernel_residual<double>(tied, z1, p), ehi::Error);
}
