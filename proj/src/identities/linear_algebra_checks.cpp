#include "common.hpp"

namespace ehi {

using namespace checks;

namespace {

CMat unpack(const std::vector<cplx>& entries, Eigen::Index rows, Eigen::Index cols) {
  if (std::ssize(entries) != rows * cols) throw Error(ErrorKind::invalid_argument, "matrix entry count");
  CMat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = entries[i * cols + j];
  return m;
}

Draw cauchy_draw(Sampler& s, NM nm) {
  return s.draw([&] {
    Draw d = start(s, nm);
    const cplx p = d.base.p();
    CMat m(d.n, d.n);
    for (int i = 0; i < d.n; ++i) d.t.push_back(s.rng().polar(0.5, 1.5));
    for (int i = 0; i < d.n; ++i) d.aux.push_back(s.rng().polar(0.5, 1.5));
    for (int i = 0; i < d.n; ++i)
      for (int j = 0; j < d.n; ++j) {
        require_off_lattice_all({d.t[i] * d.aux[j], d.t[i] / d.aux[j]}, p);
        m(i, j) = d.t[i] / theta_pm(d.t[i], d.aux[j], p);
      }
    reject_if(determinant(m).rcond < 1e-3, ErrorKind::tie_break, "ill-conditioned Cauchy matrix");
    return d;
  });
}

Draw exterior_draw(Sampler& s, NM nm) {
  Draw d = start(s, nm);
  const int size = nm.first + nm.second;
  for (int i = 0; i < size * size; ++i) d.aux.push_back(s.rng().polar(0.5, 1.5));
  return d;
}

Draw minor_draw(Sampler& s, NM nm) {
  Draw d = start(s, nm);
  for (int i = 0; i < 4; ++i) d.t.push_back(s.rng().polar(0.5, 1.5));
  CMat m(4, 2);
  for (int i = 0; i < 3; ++i)
    for (int c = 0; c < 2; ++c) m(i, c) = s.rng().polar(0.5, 1.5);
  for (int c = 0; c < 2; ++c) {
    cplx acc = 0;
    for (int i = 0; i < 3; ++i) acc += d.t[i] * m(i, c);
    m(3, c) = -acc / d.t[3];
  }
  for (int i = 0; i < 4; ++i)
    for (int c = 0; c < 2; ++c) d.aux.push_back(m(i, c));
  return d;
}

}  // namespace

IdentityReport check_cauchy_det(const Draw& d, const CheckOptions& opt) {
  const auto side = elliptic_cauchy_det<double>(d.t, d.aux, d.base.p());
  return report("cauchy-det", d, compare(side.lhs, side.rhs), tol_or(opt, 1e-10), 0);
}

IdentityReport check_exterior_power(const Draw& d, const CheckOptions& opt) {
  const int size = d.n + d.m;
  const auto side = exterior_power_det_check(unpack(d.aux, size, size), d.n);
  return report("exterior-power", d, compare(side.lhs, side.rhs), tol_or(opt, 1e-12), 0);
}

IdentityReport check_minor_relation(const Draw& d, const CheckOptions& opt) {
  const CMat m = unpack(d.aux, 4, 2);
  const CVec v = Eigen::Map<const CVec>(d.t.data(), 4);
  Residual r{0, kFloor};
  for (const auto& s : minor_relation_residual(m, v)) r = worst({r, {s.relative(), std::max(s.scale, kFloor)}});
  return report("minor-relation", d, r, tol_or(opt, 1e-11), 0);
}

namespace checks {

void register_linear_algebra(Registry& r) {
  r.push_back({"cauchy-det", "elliptic Cauchy determinant", {{3, 0}, {1, 0}, {2, 0}}, cauchy_draw,
               check_cauchy_det});
  r.push_back({"exterior-power", "determinant of an exterior power",
               {{2, 1}, {1, 2}, {2, 2}, {1, 3}, {3, 1}}, exterior_draw, check_exterior_power});
  r.push_back({"minor-relation", "minor expansion of a left kernel vector", {{0, 0}}, minor_draw,
               check_minor_relation});
}

}  // namespace checks
}  // namespace ehi
