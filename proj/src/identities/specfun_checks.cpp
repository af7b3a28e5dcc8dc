#include "common.hpp"

namespace ehi {

using namespace checks;

namespace {

// z away from the theta zeros of both bases.
cplx off_lattice_point(Sampler& s, const BasePair& b, double lo, double hi) {
  const cplx z = s.rng().polar(lo, hi);
  require_off_lattice(z, b.p());
  require_off_lattice(z, b.q());
  return z;
}

Draw point_draw(Sampler& s, NM nm, double lo, double hi) {
  return s.draw([&] {
    Draw d;
    d.base = s.base();
    d.n = nm.first;
    d.m = nm.second;
    d.aux = {off_lattice_point(s, d.base, lo, hi)};
    return d;
  });
}

// Gamma arguments must stay off its pole and zero lattices.
Draw gamma_draw(Sampler& s, NM nm) {
  return s.draw([&] {
    Draw d = point_draw(s, nm, 0.2, 1.6);
    const cplx z = d.aux[0];
    const auto& b = d.base;
    for (cplx x : {z, b.q() * z, b.p() * z, b.pq() / z}) elliptic_gamma(x, b);
    return d;
  });
}

Draw addition_draw(Sampler& s, NM nm) {
  return s.draw([&] {
    Draw d;
    d.base = s.base();
    d.n = nm.first;
    d.m = nm.second;
    for (int i = 0; i < 4; ++i) d.aux.push_back(s.rng().polar(0.4, 1.6));
    return d;
  });
}

Draw kernel_draw(Sampler& s, NM nm) {
  return s.draw([&] {
    Draw d;
    d.base = s.base();
    d.n = nm.first;
    d.m = nm.second;
    for (int i = 0; i < d.n + 2; ++i) d.t.push_back(s.rng().polar(0.4, 1.6));
    for (int i = 0; i < d.n; ++i) d.aux.push_back(s.rng().polar(0.6, 1.4));
    require_untied<double>(d.t);
    for (std::size_t i = 0; i < d.t.size(); ++i)
      for (std::size_t j = i + 1; j < d.t.size(); ++j) {
        require_off_lattice(d.t[i] * d.t[j], d.base.p());
        require_off_lattice(d.t[i] / d.t[j], d.base.p());
      }
    return d;
  });
}

constexpr double kFunctional = 1e-12;
constexpr double kAlgebraic = 1e-11;

}  // namespace

IdentityReport check_theta_quasi_periodicity(const Draw& d, const CheckOptions& opt) {
  const cplx z = d.aux.at(0);
  Residual r{0, kFloor};
  for (cplx b : {d.base.p(), d.base.q()}) r = worst({r, compare(theta(b * z, b), -theta(z, b) / z)});
  return report("theta-quasi-periodicity", d, r, tol_or(opt, kFunctional), 0);
}

IdentityReport check_theta_inversion(const Draw& d, const CheckOptions& opt) {
  const cplx z = d.aux.at(0);
  Residual r{0, kFloor};
  for (cplx b : {d.base.p(), d.base.q()}) r = worst({r, compare(theta(1.0 / z, b), -theta(z, b) / z)});
  return report("theta-inversion", d, r, tol_or(opt, kFunctional), 0);
}

IdentityReport check_gamma_q_shift(const Draw& d, const CheckOptions& opt) {
  const cplx z = d.aux.at(0);
  const auto& b = d.base;
  const auto r = compare(elliptic_gamma(b.q() * z, b), theta(z, b.p()) * elliptic_gamma(z, b));
  return report("gamma-q-shift", d, r, tol_or(opt, kFunctional), 0);
}

IdentityReport check_gamma_p_shift(const Draw& d, const CheckOptions& opt) {
  const cplx z = d.aux.at(0);
  const auto& b = d.base;
  const auto r = compare(elliptic_gamma(b.p() * z, b), theta(z, b.q()) * elliptic_gamma(z, b));
  return report("gamma-p-shift", d, r, tol_or(opt, kFunctional), 0);
}

IdentityReport check_gamma_reflection(const Draw& d, const CheckOptions& opt) {
  const cplx z = d.aux.at(0);
  const auto& b = d.base;
  const auto r = compare(elliptic_gamma(z, b) * elliptic_gamma(b.pq() / z, b), 1.0);
  return report("gamma-reflection", d, r, tol_or(opt, kFunctional), 0);
}

IdentityReport check_gamma_symmetry(const Draw& d, const CheckOptions& opt) {
  const cplx z = d.aux.at(0);
  const auto r = compare(elliptic_gamma(z, d.base), elliptic_gamma(z, d.base.swapped()));
  return report("gamma-symmetry", d, r, tol_or(opt, kFunctional), 0);
}

IdentityReport check_theta_addition(const Draw& d, const CheckOptions& opt) {
  const auto& a = d.aux;
  const auto s = theta_addition_residual(a.at(0), a.at(1), a.at(2), a.at(3), d.base.p());
  const Residual r{s.relative(), std::max(s.scale, kFloor)};
  return report("theta-addition", d, r, tol_or(opt, kAlgebraic), 0);
}

IdentityReport check_rec1_kernel(const Draw& d, const CheckOptions& opt) {
  const auto s = recurrence1_kernel_residual<double>(d.t, d.aux, d.base.p());
  const Residual r{s.relative(), std::max(s.scale, kFloor)};
  return report("rec1-kernel", d, r, tol_or(opt, kAlgebraic), 0);
}

namespace checks {

void register_specfun(Registry& r) {
  auto point = [](Sampler& s, NM nm) { return point_draw(s, nm, 0.3, 3.0); };
  r.push_back({"theta-quasi-periodicity", "theta(pz) = -theta(z)/z for both bases", {{0, 0}},
               point, check_theta_quasi_periodicity});
  r.push_back({"theta-inversion", "theta(1/z) = -theta(z)/z for both bases", {{0, 0}}, point,
               check_theta_inversion});
  r.push_back({"gamma-q-shift", "Gamma(qz) = theta_p(z) Gamma(z)", {{0, 0}}, gamma_draw,
               check_gamma_q_shift});
  r.push_back({"gamma-p-shift", "Gamma(pz) = theta_q(z) Gamma(z)", {{0, 0}}, gamma_draw,
               check_gamma_p_shift});
  r.push_back({"gamma-reflection", "Gamma(z) Gamma(pq/z) = 1", {{0, 0}}, gamma_draw,
               check_gamma_reflection});
  r.push_back({"gamma-symmetry", "Gamma is symmetric in p and q", {{0, 0}}, gamma_draw,
               check_gamma_symmetry});
  r.push_back({"theta-addition", "three-term theta addition formula", {{0, 0}}, addition_draw,
               check_theta_addition});
  r.push_back({"rec1-kernel", "integrand kernel of the (n+2)-term recurrence",
               {{1, 0}, {0, 0}, {2, 0}, {3, 0}}, kernel_draw, check_rec1_kernel});
}

}  // namespace checks
}  // namespace ehi
