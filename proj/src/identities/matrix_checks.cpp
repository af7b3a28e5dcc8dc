#include "common.hpp"

namespace ehi {

using namespace checks;

WCoefficients w_coefficients(std::span<const cplx> t, cplx z, cplx p) {
  if (t.size() != 8) throw Error(ErrorKind::invalid_argument, "W coefficients need 8 parameters");
  const cplx t3 = t[2], t4 = t[3], t7 = t[6], t8 = t[7];
  WCoefficients c;
  c.alpha = theta_pm(t4, z, p) * theta_pm(t7, t8, p) / (theta_pm(t7, z, p) * theta_pm(t4, t8, p));
  c.beta = theta_pm(t8, z, p) * theta_pm(t7, t4, p) / (theta_pm(t7, z, p) * theta_pm(t8, t4, p));
  c.gamma = theta_pm(t8, z, p) * theta(t3 / t8, p) / (theta_pm(t4, z, p) * theta(t3 / t4, p));
  c.delta = theta_pm(t8, z, p) * theta(t4 / t8, p) / (theta_pm(t3, z, p) * theta(t4 / t3, p));
  for (int j : {0, 1, 4, 5, 6}) {
    c.gamma *= theta(t4 * t[j], p) / theta(t8 * t[j], p);
    c.delta *= theta(t3 * t[j], p) / theta(t8 * t[j], p);
  }
  return c;
}

namespace {

void guard_w_coefficients(std::span<const cplx> t, cplx z, cplx p) {
  const cplx t3 = t[2], t4 = t[3], t7 = t[6], t8 = t[7];
  require_off_lattice_all({t7 * z, t7 / z, t4 * z, t4 / z, t3 * z, t3 / z, t4 * t8, t4 / t8,
                           t8 * t4, t8 / t4, t3 / t4, t4 / t3},
                          p);
  for (int j : {0, 1, 4, 5, 6}) require_off_lattice(t8 * t[j], p);
}

// Gamma factors of every W value used by the three relations.
void guard_w_values(std::span<const cplx> t, cplx z, const BasePair& b) {
  const std::vector<cplx> tv(t.begin(), t.end());
  for (int j = 0; j < 8; ++j) gamma_pm(tv[j], z, b);
  for (int j : {2, 3, 5, 6, 7}) gamma_pm(b.q() * tv[j], z, b);
}

cplx W(Eval& ev, std::span<const cplx> t, cplx z, const BasePair& b) {
  return ev.take(w_function(VParams(t, b, Normalize::none), z, ev.opt.quad));
}

Draw w_draw(Sampler& s, NM nm) {
  return s.draw([&] {
    Draw d = start(s, nm);
    const cplx p = d.base.p();
    d.t = s.balanced(repeat({0.3, 0.85}, 8), p * p);
    const cplx z = s.rng().polar(0.6, 1.4);
    d.aux = {z};
    require_untied<double>(d.t);
    guard_w_coefficients(d.t, z, p);
    guard_w_values(d.t, z, d.base);
    return d;
  });
}

struct WValues {
  cplx w26, w23, w27, w37;  // W with q-shifts on the listed pair
};

WValues w_values(Eval& ev, const Draw& d) {
  const cplx q = d.base.q(), z = d.aux.at(0);
  auto at = [&](int i, int j) { return W(ev, with(d.t, {{i, q}, {j, q}}), z, d.base); };
  return {at(2, 6), at(2, 3), at(2, 7), at(3, 7)};
}

// Matrix system. X(t, x) replaces t7, t8 by t7 x, t8 / x.
std::vector<cplx> with_x(const std::vector<cplx>& t, cplx x) { return with(t, {{6, x}, {7, 1.0 / x}}); }

std::vector<cplx> swap_pairs(const std::vector<cplx>& t) {
  std::vector<cplx> s = {t[2], t[3], t[0], t[1]};
  s.insert(s.end(), t.begin() + 4, t.end());
  return s;
}

CMat m_matrix(Eval& ev, const std::vector<cplx>& t, cplx z, const BasePair& b) {
  const cplx p = b.p(), q = b.q();
  CMat m(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = W(ev, with(t, {{j, p}, {2 + i, q}}), z, b);
  return m;
}

CMat a_matrix(const std::vector<cplx>& t, cplx z, const BasePair& b) {
  auto entries = [&](const std::vector<cplx>& s) {
    const auto c = w_coefficients(with(s, {{0, b.p()}, {7, 1.0 / b.q()}}), z, b.p());
    return std::pair{c.alpha * c.gamma + c.beta, c.alpha * c.delta};
  };
  const auto [a11, a12] = entries(t);
  const auto [a22, a21] = entries(swapped(t, 2, 3));
  CMat a(2, 2);
  a << a11, a12, a21, a22;
  return a;
}

CMat b_matrix(const std::vector<cplx>& t, cplx z, const BasePair& b) {
  return a_matrix(swap_pairs(t), z, b.swapped()).transpose();
}

Draw matrix_draw(Sampler& s, NM nm) {
  return s.draw([&] {
    Draw d = start(s, nm);
    const cplx p = d.base.p(), q = d.base.q();
    const double mq = std::min(std::abs(p), std::abs(q));
    d.t = s.balanced(concat({repeat({0.1, 0.8}, 7), {{0.1 * mq, 0.85 * mq}}}), d.base.pq());
    const cplx z = s.rng().polar(0.6, 1.4), x = s.rng().polar(0.95, 1.05);
    d.aux = {z, x};
    for (cplx y : {x, q * x, p * x}) {
      const auto tx = with_x(d.t, y);
      require_untied<double>(tx);
      for (const auto& s2 : {tx, swapped(tx, 2, 3)})
        guard_w_coefficients(with(s2, {{0, p}, {7, 1.0 / q}}), z, p);
      for (const auto& s2 : {swap_pairs(tx), swapped(swap_pairs(tx), 2, 3)})
        guard_w_coefficients(with(s2, {{0, q}, {7, 1.0 / p}}), z, q);
      for (int j = 0; j < 8; ++j) gamma_pm(tx[j], z, d.base);
      for (int j = 0; j < 4; ++j) gamma_pm((j < 2 ? p : q) * tx[j], z, d.base);
    }
    const auto shifted_t = with(d.t, {{0, 1.0 / p}, {1, p}});
    for (const auto& s2 : {with_x(shifted_t, x), swapped(with_x(shifted_t, x), 2, 3)})
      guard_w_coefficients(with(s2, {{0, p}, {7, 1.0 / q}}), z, p);
    return d;
  });
}

// Higher-order system: (m+1) x (m+1) matrix of normalized I_1^(m) values.
CMat m5_matrix(Eval& ev, const std::vector<cplx>& t, cplx x, cplx v, const BasePair& b, int m) {
  const cplx p = b.p(), q = b.q();
  const int k = m + 1;
  CMat out(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      auto tt = t;
      tt[i] /= p;
      tt[j] /= q;
      const cplx T = product(tt);
      cplx pre = 1.0 / (theta(v * v, p) * theta(1.0 / (v * v), q));
      for (int r = 0; r <= m; ++r) pre *= gamma_product({v / tt[r], 1.0 / (v * tt[r])}, b);
      pre /= gamma_product({x * v, x / v, v / (T * x), 1.0 / (v * T * x)}, b);
      for (int r = m + 1; r < 2 * m + 4; ++r) pre /= gamma_pm(tt[r], v, b);
      std::vector<cplx> par;
      for (int r = 0; r <= m; ++r) par.push_back(b.pq() * tt[r]);
      par.insert(par.end(), tt.begin() + m + 1, tt.end());
      par.push_back(x);
      par.push_back(1.0 / (T * x));
      out(j, i) = pre * ev.I(1, m, par, b);
    }
  return out;
}

CMat a5_matrix(const std::vector<cplx>& t, cplx x, cplx v, cplx p, int m) {
  const int k = m + 1, len = 2 * m + 4;
  const cplx T = product(t), tx = T * x;
  cplx f2 = theta(T * x * x, p);
  for (int l = 0; l <= m; ++l) f2 *= theta(t[l] * tx, p);
  for (int l = m + 1; l < len; ++l) f2 /= theta(tx / t[l], p);
  CMat a(k, k);
  for (int i = 0; i < k; ++i) {
    const cplx ti = t[i];
    const cplx f1 = theta_pm(ti, v, p) * theta_pm(tx, v, p) /
                    (theta_product({ti * tx, ti / tx}, p) * theta_pm(x, v, p));
    for (int j = 0; j < k; ++j) {
      const cplx tj = t[j];
      cplx f3 = theta(tj * x, p) / theta_product({tj * tx, v / tj, 1.0 / (v * tj)}, p);
      for (int l = m + 1; l < len; ++l) f3 *= theta(1.0 / (t[l] * tj), p);
      for (int l = 0; l <= m; ++l)
        if (l != j) f3 /= theta(t[l] / tj, p);
      const cplx diag = i == j ? theta_pm(x, ti, p) * theta_pm(tx, v, p) /
                                     (theta_pm(x, v, p) * theta_pm(tx, ti, p))
                               : cplx(0);
      a(i, j) = diag + f1 * f2 * f3;
    }
  }
  return a;
}

void guard_a5(const std::vector<cplx>& t, cplx x, cplx v, cplx p, int m) {
  const cplx tx = product(t) * x;
  require_off_lattice_all({x * v, x / v}, p);
  for (int l = m + 1; l < 2 * m + 4; ++l) require_off_lattice(tx / t[l], p);
  for (int i = 0; i <= m; ++i) {
    require_off_lattice_all({tx * t[i], tx / t[i], v / t[i], 1.0 / (v * t[i])}, p);
    for (int l = 0; l <= m; ++l)
      if (l != i) require_off_lattice(t[l] / t[i], p);
  }
}

Draw im_matrix_draw(Sampler& s, NM nm) {
  return s.draw([&] {
    Draw d = start(s, nm);
    const int m = d.m;
    const cplx p = d.base.p(), q = d.base.q();
    const cplx x = s.rng().polar(0.75, 0.93), v = s.rng().polar(0.6, 1.4);
    const double big = std::max(std::abs(p), std::abs(q));
    const double lo = big / (0.85 * std::abs(x)), hi = std::pow(0.93, 2 * m + 4);
    reject_if(!(lo < hi), ErrorKind::sampler_infeasible, "no room for prod t");
    const cplx target = std::polar(std::exp(s.rng().uniform(std::log(lo), std::log(hi))),
                                   2.0 * std::acos(-1.0) * s.rng().uniform());
    d.t = s.balanced(repeat({0.7, 0.93}, 2 * m + 4), target);
    d.aux = {x, v};
    require_untied<double>(d.t);
    for (cplx y : {x, q * x, p * x}) {
      guard_a5(d.t, y, v, p, m);
      guard_a5(d.t, y, v, q, m);
    }
    return d;
  });
}

constexpr double kThreeTerm = 1e-7;
constexpr double kAlgebraic = 1e-11;
constexpr double kTranspose = 1e-8;
constexpr double kImSystem = 1e-6;

}  // namespace

IdentityReport check_w_c1(const Draw& d, const CheckOptions& opt) {
  Eval ev{opt};
  const auto w = w_values(ev, d);
  const auto c = w_coefficients(d.t, d.aux.at(0), d.base.p());
  const auto r = compare_sum(w.w26, {c.alpha * w.w23, c.beta * w.w27});
  return report("w-c1", d, r, tol_or(opt, kThreeTerm), ev.nodes);
}

IdentityReport check_w_c2(const Draw& d, const CheckOptions& opt) {
  Eval ev{opt};
  const auto w = w_values(ev, d);
  const auto c = w_coefficients(d.t, d.aux.at(0), d.base.p());
  const auto r = compare_sum(w.w23, {c.gamma * w.w27, c.delta * w.w37});
  return report("w-c2", d, r, tol_or(opt, kThreeTerm), ev.nodes);
}

IdentityReport check_w_c3(const Draw& d, const CheckOptions& opt) {
  Eval ev{opt};
  const auto w = w_values(ev, d);
  const auto c = w_coefficients(d.t, d.aux.at(0), d.base.p());
  const auto r = compare_sum(w.w26, {(c.alpha * c.gamma + c.beta) * w.w27, c.alpha * c.delta * w.w37});
  return report("w-c3", d, r, tol_or(opt, kThreeTerm), ev.nodes);
}

IdentityReport check_w_coefficient_ellipticity(const Draw& d, const CheckOptions& opt) {
  const cplx p = d.base.p(), z = d.aux.at(0);
  const auto c0 = w_coefficients(d.t, z, p);
  Residual r{0, kFloor};
  auto against = [&](const WCoefficients& c) {
    r = worst({r, compare(c.alpha, c0.alpha), compare(c.beta, c0.beta), compare(c.gamma, c0.gamma),
               compare(c.delta, c0.delta)});
  };
  against(w_coefficients(d.t, p * z, p));
  against(w_coefficients(d.t, 1.0 / z, p));
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) against(w_coefficients(with(d.t, {{i, p}, {j, 1.0 / p}}), z, p));
  return report("w-coefficient-ellipticity", d, r, tol_or(opt, kAlgebraic), 0);
}

IdentityReport check_matrix_a_eq(const Draw& d, const CheckOptions& opt) {
  Eval ev{opt};
  const cplx z = d.aux.at(0), x = d.aux.at(1), q = d.base.q();
  const CMat m = m_matrix(ev, with_x(d.t, x), z, d.base);
  const CMat mq = m_matrix(ev, with_x(d.t, q * x), z, d.base);
  const auto r = matrix_residual(mq, a_matrix(with_x(d.t, x), z, d.base) * m);
  return report("matrix-a-eq", d, r, tol_or(opt, kThreeTerm), ev.nodes);
}

IdentityReport check_matrix_b_eq(const Draw& d, const CheckOptions& opt) {
  Eval ev{opt};
  const cplx z = d.aux.at(0), x = d.aux.at(1), p = d.base.p();
  const CMat m = m_matrix(ev, with_x(d.t, x), z, d.base);
  const CMat mp = m_matrix(ev, with_x(d.t, p * x), z, d.base);
  const auto r = matrix_residual(mp, m * b_matrix(with_x(d.t, x), z, d.base));
  return report("matrix-b-eq", d, r, tol_or(opt, kThreeTerm), ev.nodes);
}

IdentityReport check_matrix_a_ellipticity(const Draw& d, const CheckOptions& opt) {
  const cplx z = d.aux.at(0), x = d.aux.at(1), p = d.base.p();
  const CMat a = a_matrix(with_x(d.t, x), z, d.base);
  const CMat a2 = a_matrix(with_x(with(d.t, {{0, 1.0 / p}, {1, p}}), x), z, d.base);
  return report("matrix-a-ellipticity", d, matrix_residual(a2, a), tol_or(opt, kAlgebraic), 0);
}

IdentityReport check_matrix_transpose(const Draw& d, const CheckOptions& opt) {
  Eval ev{opt};
  const cplx z = d.aux.at(0), x = d.aux.at(1);
  const auto tx = with_x(d.t, x);
  const CMat m = m_matrix(ev, tx, z, d.base);
  const CMat ms = m_matrix(ev, swap_pairs(tx), z, d.base.swapped());
  return report("matrix-transpose", d, matrix_residual(ms, m.transpose()), tol_or(opt, kTranspose),
                ev.nodes);
}

IdentityReport check_im_matrix_system(const Draw& d, const CheckOptions& opt) {
  Eval ev{opt};
  const cplx x = d.aux.at(0), v = d.aux.at(1), q = d.base.q();
  const CMat m = m5_matrix(ev, d.t, x, v, d.base, d.m);
  const CMat mq = m5_matrix(ev, d.t, q * x, v, d.base, d.m);
  const auto r = matrix_residual(mq, a5_matrix(d.t, x, v, d.base.p(), d.m) * m);
  return report("im-matrix-system", d, r, tol_or(opt, kImSystem), ev.nodes);
}

IdentityReport check_im_matrix_ellipticity(const Draw& d, const CheckOptions& opt) {
  const cplx x = d.aux.at(0), v = d.aux.at(1), p = d.base.p();
  const auto r = matrix_residual(a5_matrix(d.t, p * x, v, p, d.m), a5_matrix(d.t, x, v, p, d.m));
  return report("im-matrix-ellipticity", d, r, tol_or(opt, kAlgebraic), 0);
}

IdentityReport check_im_matrix_transpose(const Draw& d, const CheckOptions& opt) {
  Eval ev{opt};
  const cplx x = d.aux.at(0), v = d.aux.at(1);
  const CMat m = m5_matrix(ev, d.t, x, v, d.base, d.m);
  const CMat ms = m5_matrix(ev, d.t, x, v, d.base.swapped(), d.m);
  return report("im-matrix-transpose", d, matrix_residual(ms, m.transpose()),
                tol_or(opt, kTranspose), ev.nodes);
}

namespace checks {

void register_matrix(Registry& r) {
  r.push_back({"w-c1", "W relation with coefficients alpha, beta", {{0, 0}}, w_draw, check_w_c1});
  r.push_back({"w-c2", "W relation with coefficients gamma, delta", {{0, 0}}, w_draw, check_w_c2});
  r.push_back({"w-c3", "W relation after eliminating one value", {{0, 0}}, w_draw, check_w_c3});
  r.push_back({"w-coefficient-ellipticity", "alpha..delta are p-elliptic", {{0, 0}}, w_draw,
               check_w_coefficient_ellipticity});
  r.push_back({"matrix-a-eq", "M(qx) = A(x) M(x)", {{0, 0}}, matrix_draw, check_matrix_a_eq});
  r.push_back({"matrix-b-eq", "M(px) = M(x) B(x)", {{0, 0}}, matrix_draw, check_matrix_b_eq});
  r.push_back({"matrix-a-ellipticity", "A invariant under (t1, t2) -> (t1/p, p t2)", {{0, 0}},
               matrix_draw, check_matrix_a_ellipticity});
  r.push_back({"matrix-transpose", "p <-> q swap transposes M", {{0, 0}}, matrix_draw,
               check_matrix_transpose});
  r.push_back({"im-matrix-system", "explicit A(x) system for shifted I_1^(m)", {{1, 1}, {1, 2}},
               im_matrix_draw, check_im_matrix_system});
  r.push_back({"im-matrix-ellipticity", "A(px) = A(x) entrywise", {{1, 1}, {1, 2}}, im_matrix_draw,
               check_im_matrix_ellipticity});
  r.push_back({"im-matrix-transpose", "p <-> q swap transposes the I_1^(m) matrix",
               {{1, 1}, {1, 2}}, im_matrix_draw, check_im_matrix_transpose});
}

}  // namespace checks
}  // namespace ehi
