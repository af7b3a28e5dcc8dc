#include "common.hpp"

namespace ehi {

using namespace checks;

cplx potential_a(std::span<const cplx> t, cplx q, cplx p) {
  if (t.size() != 8) throw Error(ErrorKind::invalid_argument, "potential needs 8 parameters");
  const cplx t1 = t[0], t2 = t[1], t3 = t[2];
  cplx r = theta_product({t1 / (q * t3), t3 * t1, t3 / t1}, p) /
           theta_product({t1 / t2, t2 / (q * t1), t1 * t2 / q}, p);
  for (int k = 3; k < 8; ++k) r *= theta(t2 * t[k] / q, p) / theta(t3 * t[k], p);
  return r;
}

namespace {

void guard_potential(std::span<const cplx> t, cplx q, cplx p) {
  for (int s = 0; s < 2; ++s) {
    const cplx a = t[s], b = t[1 - s];
    require_off_lattice_all({a / b, b / (q * a), a * b / q}, p);
  }
  for (int k = 3; k < 8; ++k) require_off_lattice(t[2] * t[k], p);
}

cplx U(Eval& ev, std::span<const cplx> t, const BasePair& b) {
  return ev.take(u_function(VParams(t, b, Normalize::none), ev.opt.quad));
}

Residual eheq_residual(Eval& ev, std::span<const cplx> t, const BasePair& b, cplx shift_p) {
  // Solution U(t1 / shift_p, shift_p t2); shift_p = 1 is U itself.
  const cplx q = b.q(), p = b.p();
  const std::vector<cplx> tv(t.begin(), t.end());
  auto sol = [&](cplx f0, cplx f1) { return U(ev, with(tv, {{0, f0 / shift_p}, {1, f1 * shift_p}}), b); };
  const cplx u = sol(1, 1);
  const cplx terms[3] = {potential_a(tv, q, p) * (sol(q, 1.0 / q) - u),
                         potential_a(swapped(tv, 0, 1), q, p) * (sol(1.0 / q, q) - u), u};
  return vanishing(terms);
}

Draw beta_draw(Sampler& s, NM nm) {
  return s.draw([&] {
    Draw d = start(s, nm);
    d.t = s.balanced(repeat({0.1, 0.8}, 6), d.base.pq());
    pair_product(d.t, d.base);
    return d;
  });
}

Draw v_reduction_draw(Sampler& s, NM nm) {
  return s.draw([&] {
    Draw d = start(s, nm);
    const cplx pq = d.base.pq();
    d.t = s.balanced(repeat({0.1, 0.8}, 6), pq);
    const cplx t7 = s.rng().polar(std::abs(pq) / 0.8, 0.8);
    d.t.push_back(t7);
    d.t.push_back(pq / t7);
    pair_product(std::span<const cplx>(d.t).first(6), d.base);
    return d;
  });
}

Draw contiguity1_draw(Sampler& s, NM nm) {
  return s.draw([&] {
    Draw d = start(s, nm);
    const cplx p = d.base.p(), q = d.base.q();
    d.t = s.balanced(repeat({0.1, 0.8}, 8), p * p * q);
    require_untied<double>(std::span<const cplx>(d.t).first(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) require_off_lattice_all({d.t[i] * d.t[j], d.t[i] / d.t[j]}, p);
    return d;
  });
}

Draw contiguity3_draw(Sampler& s, NM nm) {
  return s.draw([&] {
    Draw d = start(s, nm);
    const cplx p = d.base.p(), q = d.base.q();
    const double Q = std::abs(q);
    d.t = s.balanced(concat({repeat({0.1 * Q, 0.9 * Q}, 3), repeat({0.1, 0.8}, 5)}),
                     p * p * q * q * q);
    require_untied<double>(std::span<const cplx>(d.t).first(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) require_off_lattice(d.t[j] / d.t[i], p);
    return d;
  });
}

Draw eheq_draw(Sampler& s, NM nm) {
  return s.draw([&] {
    Draw d = start(s, nm);
    const cplx p = d.base.p(), q = d.base.q();
    const double Q = std::abs(q);
    d.t = s.balanced(concat({repeat({0.3 * Q, 0.9 * Q}, 2), repeat({0.3, 0.9}, 6)}),
                     d.base.pq() * d.base.pq());
    guard_potential(d.t, q, p);
    return d;
  });
}

Draw eheq_second_draw(Sampler& s, NM nm) {
  return s.draw([&] {
    Draw d = start(s, nm);
    const cplx p = d.base.p(), q = d.base.q();
    const double P = std::abs(p), Q = std::abs(q), PQ = P * Q;
    const double hi = std::min(0.8, 0.9 * Q / P);
    d.t = s.balanced(concat({{{0.1 * PQ, 0.9 * PQ}, {0.3 * hi, hi}}, repeat({0.3, 0.9}, 6)}),
                     d.base.pq() * d.base.pq());
    guard_potential(d.t, q, p);
    return d;
  });
}

Draw eheq_qgt1_draw(Sampler& s, NM nm) {
  return s.draw([&] {
    Draw d = start(s, nm);
    const cplx p = d.base.p(), big_q = 1.0 / d.base.q();
    const double Q = std::abs(big_q), sp = std::sqrt(std::abs(p));
    d.t = s.balanced(concat({repeat({Q * sp / 0.9, Q * sp / 0.3}, 2), repeat({sp / 0.9, sp / 0.3}, 6)}),
                     p * p * big_q * big_q);
    d.aux = {big_q};
    guard_potential(d.t, big_q, p);
    return d;
  });
}

Draw potential_draw(Sampler& s, NM nm) {
  return s.draw([&] {
    Draw d = start(s, nm);
    const cplx p = d.base.p(), q = d.base.q();
    d.t = s.balanced(repeat({0.2, 1.5}, 8), d.base.pq() * d.base.pq());
    guard_potential(d.t, q, p);
    guard_potential(with(d.t, {{0, 1.0 / p}, {1, p}}), q, p);
    return d;
  });
}

Draw potential_inversion_draw(Sampler& s, NM nm) {
  return s.draw([&] {
    Draw d = start(s, nm);
    const cplx p = d.base.p(), q = d.base.q(), sp = std::sqrt(p);
    for (int i = 0; i < 8; ++i) d.t.push_back(s.rng().polar(0.2, 1.5));
    std::vector<cplx> inv;
    for (cplx x : d.t) inv.push_back(sp / x);
    guard_potential(inv, q, p);
    guard_potential(d.t, 1.0 / q, p);
    return d;
  });
}

Draw casoratian_draw(Sampler& s, NM nm) {
  return s.draw([&] {
    Draw d = start(s, nm);
    d.t = s.balanced(repeat({0.2, 0.8}, 8), d.base.pq());
    require_untied<double>(std::span<const cplx>(d.t).first(2));
    const cplx t1 = d.t[0], t2 = d.t[1];
    gamma_product({t1 * t2, t1 / t2, t2 / t1, 1.0 / (t1 * t2)}, d.base);
    pair_product(d.t, d.base);
    return d;
  });
}

Draw crossing_draw(Sampler& s, NM nm) {
  return s.draw([&] {
    Draw d = start(s, nm);
    const double big = std::max(std::abs(d.base.p()), std::abs(d.base.q()));
    d.t = s.balanced(concat({repeat({0.1, 0.7}, 2), {{1.05, std::min(1.3, 0.85 / big)}},
                             repeat({0.1, 0.7}, 5)}),
                     d.base.pq() * d.base.pq());
    crossing_term(d.t, 2, d.base);
    return d;
  });
}

constexpr double kSingle = 1e-8;
constexpr double kThreeTerm = 1e-7;
constexpr double kProducts = 1e-6;
constexpr double kAlgebraic = 1e-11;

}  // namespace

IdentityReport check_elliptic_beta(const Draw& d, const CheckOptions& opt) {
  Eval ev{opt};
  const auto lhs = ev.I(1, 0, d.t, d.base);
  const auto r = compare(lhs, pair_product(d.t, d.base));
  return report("elliptic-beta", d, r, tol_or(opt, kSingle), ev.nodes);
}

IdentityReport check_v_reduction(const Draw& d, const CheckOptions& opt) {
  Eval ev{opt};
  const auto lhs = ev.V(d.t, d.base);
  const auto r = compare(lhs, pair_product(std::span<const cplx>(d.t).first(6), d.base));
  return report("v-reduction", d, r, tol_or(opt, kSingle), ev.nodes);
}

IdentityReport check_contiguity1(const Draw& d, const CheckOptions& opt) {
  Eval ev{opt};
  const cplx p = d.base.p(), q = d.base.q();
  const auto& t = d.t;
  cplx terms[3];
  for (int i = 0; i < 3; ++i) {
    const int a = i == 0 ? 1 : 0, b = i == 2 ? 1 : 2;
    terms[i] = t[i] * ev.V(with(t, {{i, q}}), d.base) /
               (theta_pm(t[i], t[a], p) * theta_pm(t[i], t[b], p));
  }
  return report("contiguity1", d, vanishing(terms), tol_or(opt, kThreeTerm), ev.nodes);
}

IdentityReport check_contiguity3(const Draw& d, const CheckOptions& opt) {
  Eval ev{opt};
  const cplx p = d.base.p(), q = d.base.q();
  const auto& t = d.t;
  cplx terms[3];
  for (int i = 0; i < 3; ++i) {
    const int a = i == 0 ? 1 : 0, b = i == 2 ? 1 : 2;
    cplx c = 1.0 / (t[i] * theta_product({t[a] / t[i], t[b] / t[i]}, p));
    for (int j = 3; j < 8; ++j) c *= theta(t[i] * t[j] / q, p);
    terms[i] = c * ev.V(with(t, {{i, 1.0 / q}}), d.base);
  }
  return report("contiguity3", d, vanishing(terms), tol_or(opt, kThreeTerm), ev.nodes);
}

IdentityReport check_eheq(const Draw& d, const CheckOptions& opt) {
  Eval ev{opt};
  const auto r = eheq_residual(ev, d.t, d.base, 1.0);
  return report("eheq", d, r, tol_or(opt, kThreeTerm), ev.nodes);
}

IdentityReport check_eheq_second_solution(const Draw& d, const CheckOptions& opt) {
  Eval ev{opt};
  const auto r = eheq_residual(ev, d.t, d.base, d.base.p());
  return report("eheq-second-solution", d, r, tol_or(opt, kThreeTerm), ev.nodes);
}

IdentityReport check_eheq_qgt1(const Draw& d, const CheckOptions& opt) {
  Eval ev{opt};
  const cplx p = d.base.p(), Q = d.aux.at(0);
  auto sol = [&](cplx f0, cplx f1) {
    return ev.take(v_qgt1_solution(with(d.t, {{0, f0}, {1, f1}}), p, Q, opt.quad));
  };
  const cplx u = sol(1, 1);
  const cplx terms[3] = {potential_a(d.t, Q, p) * (sol(Q, 1.0 / Q) - u),
                         potential_a(swapped(d.t, 0, 1), Q, p) * (sol(1.0 / Q, Q) - u), u};
  return report("eheq-qgt1", d, vanishing(terms), tol_or(opt, kProducts), ev.nodes);
}

IdentityReport check_potential_ellipticity(const Draw& d, const CheckOptions& opt) {
  const cplx p = d.base.p(), q = d.base.q();
  const auto r = compare(potential_a(with(d.t, {{0, 1.0 / p}, {1, p}}), q, p), potential_a(d.t, q, p));
  return report("potential-ellipticity", d, r, tol_or(opt, kAlgebraic), 0);
}

IdentityReport check_potential_q_inversion(const Draw& d, const CheckOptions& opt) {
  const cplx p = d.base.p(), q = d.base.q(), sp = std::sqrt(p);
  std::vector<cplx> inv;
  for (cplx x : d.t) inv.push_back(sp / x);
  const auto r = compare(potential_a(inv, q, p), potential_a(d.t, 1.0 / q, p));
  return report("potential-q-inversion", d, r, tol_or(opt, kAlgebraic), 0);
}

namespace {

// V(pq t1, t2) V(t1, pq t2) - (t1 t2)^-2 V(q t1, p t2) V(p t1, q t2): both products and
// the difference.
struct Casoratian {
  cplx a, b;
};

Casoratian casoratian(Eval& ev, const std::vector<cplx>& t, const BasePair& base) {
  const cplx p = base.p(), q = base.q(), pq = base.pq();
  const cplx a = ev.V(with(t, {{0, pq}}), base) * ev.V(with(t, {{1, pq}}), base);
  const cplx b = ev.V(with(t, {{0, q}, {1, p}}), base) * ev.V(with(t, {{0, p}, {1, q}}), base) /
                 (t[0] * t[0] * t[1] * t[1]);
  return {a, b};
}

cplx cross_gamma(const std::vector<cplx>& t, const BasePair& base) {
  const cplx t1 = t[0], t2 = t[1];
  return gamma_product({t1 * t2, t1 / t2, t2 / t1, 1.0 / (t1 * t2)}, base);
}

}  // namespace

IdentityReport check_casoratian(const Draw& d, const CheckOptions& opt) {
  Eval ev{opt};
  const auto c = casoratian(ev, d.t, d.base);
  const cplx rhs = pair_product(d.t, d.base) / cross_gamma(d.t, d.base);
  const double s = std::max({std::abs(c.a), std::abs(c.b), std::abs(rhs), kFloor});
  const Residual r{std::abs(c.a - c.b - rhs) / s, s};
  return report("casoratian", d, r, tol_or(opt, kProducts), ev.nodes);
}

IdentityReport check_three_routes(const Draw& d, const CheckOptions& opt) {
  Eval ev{opt};
  const auto c = casoratian(ev, d.t, d.base);
  const cplx routes[3] = {(c.a - c.b) * cross_gamma(d.t, d.base), ev.I(2, 0, d.t, d.base),
                          ev.direct(2, 0, d.t, d.base)};
  const auto r = worst({compare(routes[0], routes[1]), compare(routes[0], routes[2]),
                        compare(routes[1], routes[2])});
  return report("three-routes", d, r, tol_or(opt, kProducts), ev.nodes);
}

IdentityReport check_residue_crossing(const Draw& d, const CheckOptions& opt) {
  Eval ev{opt};
  const auto& b = d.base;
  const cplx k = kappa(b);
  auto on_circle = [&](double radius) {
    const auto f = [&](cplx z) { return univariate_density(z, d.t, b); };
    return k * ev.take(contour_integrate(f, Contour{radius}, opt.quad));
  };
  // A circle just outside |t_3| picks up half the crossing term.
  const cplx vt = on_circle(1.0);
  const cplx deformed = 2.0 * on_circle(1.05 * std::abs(d.t[2])) - vt;
  const auto r = compare(deformed, vt + crossing_term(d.t, 2, b));
  return report("residue-crossing", d, r, tol_or(opt, kSingle), ev.nodes);
}

namespace checks {

void register_univariate(Registry& r) {
  r.push_back({"elliptic-beta", "six-parameter elliptic beta integral", {{1, 0}}, beta_draw,
               check_elliptic_beta});
  r.push_back({"v-reduction", "V with t7 t8 = pq reduces to the beta integral", {{0, 0}},
               v_reduction_draw, check_v_reduction});
  r.push_back({"contiguity1", "three-term contiguity relation, q-shifts", {{0, 0}},
               contiguity1_draw, check_contiguity1});
  r.push_back({"contiguity3", "three-term contiguity relation, inverse q-shifts", {{0, 0}},
               contiguity3_draw, check_contiguity3});
  r.push_back({"eheq", "U solves the elliptic hypergeometric equation", {{0, 0}}, eheq_draw,
               check_eheq});
  r.push_back({"eheq-second-solution", "U(t1/p, p t2) solves the same equation", {{0, 0}},
               eheq_second_draw, check_eheq_second_solution});
  r.push_back({"eheq-qgt1", "the |q| > 1 solution solves the equation", {{0, 0}},
               eheq_qgt1_draw, check_eheq_qgt1});
  r.push_back({"potential-ellipticity", "the potential is p-elliptic in t1, t2", {{0, 0}},
               potential_draw, check_potential_ellipticity});
  r.push_back({"potential-q-inversion", "potential under t -> sqrt(p)/t, q -> 1/q", {{0, 0}},
               potential_inversion_draw, check_potential_q_inversion});
  r.push_back({"casoratian", "Casoratian of two V solutions", {{0, 0}}, casoratian_draw,
               check_casoratian});
  r.push_back({"three-routes", "Casoratian, determinant and tensor values of I_2^(0)", {{2, 0}},
               casoratian_draw, check_three_routes});
  r.push_back({"residue-crossing", "contour deformation past a parameter pole", {{0, 0}},
               crossing_draw, check_residue_crossing});
}

}  // namespace checks
}  // namespace ehi
