#include <doctest.h>

#include <algorithm>
#include <vector>

#include "ehi/integrals.hpp"
#include "support.hpp"

using ehi::BasePair;
using ehi::cplx;
using ehi::Normalize;
using ehi::TypeIParams;
using ehi::VParams;
using test::rel;

namespace {

cplx pair_product(const std::vector<cplx>& t, const BasePair& b) {
  cplx r = 1;
  for (std::size_t j = 0; j < t.size(); ++j)
    for (std::size_t k = j + 1; k < t.size(); ++k) r *= ehi::elliptic_gamma(t[j] * t[k], b);
  return r;
}

BasePair draw_base(test::Draws& d) { return BasePair(d.polar(0.15, 0.4), d.polar(0.15, 0.4)); }

}  // namespace

TEST_CASE("elliptic beta integral") {
  test::Draws d(21);
  for (int i = 0; i < 3; ++i) {
    const auto b = draw_base(d);
    const auto t = test::balanced(d, 6, b.pq());
    const auto r = ehi::i1m(TypeIParams(1, 0, t, b, Normalize::none));
    CHECK(r.converged);
    CHECK(r.nodes_used <= 1024);
    CHECK(rel(r.value, pair_product(t, b)) < 1e-10);
  }
}

TEST_CASE("V reduces to the beta integral when t7 t8 = pq") {
  test::Draws d(22);
  const auto b = draw_base(d);
  auto t = test::balanced(d, 6, b.pq());
  const cplx t7 = d.polar(0.5, 0.8);
  t.push_back(t7);
  t.push_back(b.pq() / t7);
  const VParams vp(t, b, Normalize::none);
  const auto v = ehi::v_function(vp);
  CHECK(rel(v.value, pair_product({t.begin(), t.begin() + 6}, b)) < 1e-10);
  // Symmetries of the integrand.
  CHECK(rel(ehi::v_function(VParams(t, b.swapped(), Normalize::none)).value, v.value) < 1e-12);
  std::vector<cplx> perm(t.rbegin(), t.rend());
  CHECK(rel(ehi::v_function(VParams(perm, b, Normalize::none)).value, v.value) < 1e-12);
}

TEST_CASE("contour radius does not matter while no pole is crossed") {
  test::Draws d(23);
  const auto b = draw_base(d);
  const VParams vp(test::balanced(d, 8, b.pq() * b.pq(), 0.3, 0.8), b, Normalize::none);
  const auto r1 = ehi::v_function(vp);
  const auto r2 = ehi::v_function(vp, {}, {0.92, 0.0});
  const auto r3 = ehi::v_function(vp, {}, {0.9, 0.0});
  CHECK(rel(r1.value, r2.value) < 1e-10);
  CHECK(rel(r1.value, r3.value) < 1e-10);
}

TEST_CASE("contour validity is enforced") {
  const BasePair b(cplx(0.3, 0.1), cplx(0.2, -0.2));
  std::vector<cplx> t{1.1, 0.3, 0.4, 0.5, 0.6, 0.5, 0.4, 0.3};
  const VParams vp(t, b);
  try {
    ehi::v_function(vp);
    FAIL("expected an error");
  } catch (const ehi::Error& e) {
    CHECK(e.kind() == ehi::ErrorKind::contour_invalid);
  }
}

TEST_CASE("W and U normalizations") {
  test::Draws d(24);
  const auto b = draw_base(d);
  const VParams vp(test::balanced(d, 8, b.pq() * b.pq()), b, Normalize::none);
  const cplx v = ehi::v_function(vp).value;
  const cplx z(0.8, 0.5);
  cplx g = 1;
  for (auto tj : vp.t()) g *= ehi::gamma_pm(tj, z, b);
  CHECK(rel(ehi::w_function(vp, z).value * g, v) < 1e-14);
  CHECK(rel(ehi::w_function(vp, z).value, ehi::w_function(vp, 1.0 / z).value) < 1e-13);
  const auto& t = vp.t();
  const cplx u = ehi::u_function(vp).value;
  CHECK(rel(u * ehi::gamma_pm(t[0], t[2], b) * ehi::gamma_pm(t[1], t[2], b), v) < 1e-14);
  std::vector<cplx> perm(t.begin(), t.end());
  std::reverse(perm.begin() + 3, perm.end());
  CHECK(rel(ehi::u_function(VParams(perm, b, Normalize::none)).value, u) < 1e-12);
}

TEST_CASE("I_1^(1) with a reflection pair collapses to I_1^(0)") {
  test::Draws d(25);
  const auto b = draw_base(d);
  auto t = test::balanced(d, 6, b.pq());
  const cplx s = d.polar(0.5, 0.8);
  std::vector<cplx> t8 = t;
  t8.push_back(s);
  t8.push_back(b.pq() / s);
  const auto full = ehi::i1m(TypeIParams(1, 1, t8, b, Normalize::none));
  const auto base = ehi::i1m(TypeIParams(1, 0, t, b, Normalize::none));
  CHECK(rel(full.value, base.value) < 1e-10);
}

TEST_CASE("parameter normalization and shifts") {
  const BasePair b(cplx(0.3, 0.1), cplx(0.2, -0.2));
  std::vector<cplx> t{0.5, 0.6, {0.1, 0.7}, 0.4, 0.5, 0.6, 0.7, 99.0};
  const VParams vp(t, b);
  cplx prod = 1;
  for (auto x : vp.t()) prod *= x;
  CHECK(rel(prod, b.pq() * b.pq()) < 1e-15);
  CHECK_THROWS_AS(VParams(t, b, Normalize::none), ehi::Error);

  const std::vector<ehi::ShiftSpec> ok{{0, 0, 1}, {1, 0, -1}};
  const auto s = ehi::apply_shifts(vp, ok);
  CHECK(rel(s.t()[0], vp.t()[0] * b.q()) < 1e-15);
  const std::vector<ehi::ShiftSpec> bad{{0, 0, 1}};
  try {
    ehi::apply_shifts(vp, bad);
    FAIL("expected an error");
  } catch (const ehi::Error& e) {
    CHECK(e.kind() == ehi::ErrorKind::balancing_violated);
  }
  const std::vector<ehi::ShiftSpec> reordered{{1, 0, -1}, {0, 0, 1}};
  const auto s2 = ehi::apply_shifts(vp, reordered);
  for (int i = 0; i < 8; ++i) CHECK(s.t()[i] == s2.t()[i]);

  CHECK_THROWS_AS(TypeIParams(2, 0, std::vector<cplx>(6, 0.5), b), ehi::Error);
}

TEST_CASE("direct and determinant forms of I_n^(m)") {
  test::Draws d(26);
  const auto b = draw_base(d);
  SUBCASE("n = 1") {
    const TypeIParams p(1, 1, test::balanced(d, 8, b.pq() * b.pq()), b, Normalize::none);
    const cplx ref = ehi::i1m(p).value;
    CHECK(rel(ehi::inm_direct(p).value, ref) < 1e-9);
    CHECK(rel(ehi::inm_det(p).value, ref) < 1e-14);
  }
  SUBCASE("n = 2, m = 0") {
    const auto t = test::balanced(d, 8, b.pq());
    const TypeIParams p(2, 0, t, b, Normalize::none);
    const cplx ref = pair_product(t, b);
    const auto det = ehi::inm_det(p);
    CHECK(det.converged);
    CHECK(rel(det.value, ref) < 1e-9);
    const auto direct = ehi::inm_direct(p);
    CHECK(direct.converged);
    CHECK(rel(direct.value, ref) < 1e-8);
    const std::vector<int> a{2, 3}, bb{0, 1};
    CHECK(rel(ehi::inm_det(p, {}, a, bb).value, det.value) < 1e-8);
    CHECK(rel(ehi::inm_det(p.swapped_bases()).value, det.value) < 1e-9);
  }
  SUBCASE("n = 2, m = 1") {
    const TypeIParams p(2, 1, test::balanced(d, 10, b.pq() * b.pq()), b, Normalize::none);
    const auto det = ehi::inm_det(p);
    CHECK(rel(ehi::inm_direct(p).value, det.value) < 1e-6);
  }
  SUBCASE("caps") {
    const TypeIParams p3(3, 0, test::balanced(d, 10, b.pq()), b, Normalize::none);
    CHECK_THROWS_AS(ehi::inm_direct(p3), ehi::Error);
  }
}

TEST_CASE("continuation across the unit circle") {
  // With |t_8| > 1 the circle |z| = r slightly larger than |t_8| encloses the
  // pole at t_8 and its mirror 1/t_8; by the z -> 1/z symmetry it picks up
  // half of the crossing term relative to the unit circle.
  test::Draws d(27);
  const auto b = draw_base(d);
  const cplx big = std::polar(1.15, 0.4);
  auto t = test::balanced(d, 7, b.pq() * b.pq() / big, 0.3, 0.7);
  t.push_back(big);
  const TypeIParams p(1, 1, t, b, Normalize::none);
  const auto cont = ehi::i1m_continued(p);
  auto f = [&](cplx z) { return ehi::univariate_density(z, t, b); };
  const cplx unit = ehi::kappa(b) * ehi::contour_integrate(f).value;
  const cplx outer = ehi::kappa(b) * ehi::contour_integrate(f, {1.2, 0.0}).value;
  CHECK(rel(cont.value, 2.0 * outer - unit) < 1e-9);
  CHECK(rel(cont.value - unit, ehi::crossing_term(t, 7, b)) < 1e-12);
  CHECK_THROWS_AS(ehi::i1m(p), ehi::Error);
}

TEST_CASE("|q| > 1 solution") {
  const cplx p(0.2, 0.1), qs(0.25, -0.15);
  const cplx qb = 1.0 / qs;
  const double sp = std::sqrt(std::abs(p));
  test::Draws d(28);
  std::vector<cplx> t(8);
  // p^{1/2}/t_j must stay inside the unit disk, also after t_{1,2} -> q^{+-1} t_{1,2}.
  for (int attempt = 0; attempt < 100000; ++attempt) {
    cplx prod = 1;
    for (int i = 0; i < 7; ++i) {
      t[i] = d.polar(sp / 0.8, sp / 0.4) * (i < 2 ? std::abs(qb) : 1.0);
      prod *= t[i];
    }
    t[7] = p * p * qb * qb / prod;
    if (std::abs(t[7]) > sp / 0.8 && std::abs(t[7]) < sp / 0.3) break;
  }
  const auto r = ehi::v_qgt1_solution(t, p, qb);
  const auto f = ehi::v_qgt1_solution(t, p, qb, {}, true);
  CHECK(rel(r.value, f.value) < 1e-12);
  std::vector<cplx> off = t;
  off[7] *= 1.01;
  CHECK_THROWS_AS(ehi::v_qgt1_solution(off, p, qb), ehi::Error);
}
