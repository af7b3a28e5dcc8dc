#include <numeric>

#include "common.hpp"

namespace ehi {

using namespace checks;

std::vector<cplx> rec1_coefficients(std::span<const cplx> t, int n, cplx z, cplx p) {
  std::vector<cplx> c;
  for (int i = 0; i < n + 2; ++i) {
    cplx v = t[i] * std::pow(theta_pm(t[i], z, p), n);
    for (int j = 0; j < n + 2; ++j)
      if (j != i) v /= theta_pm(t[i], t[j], p);
    c.push_back(v);
  }
  return c;
}

std::vector<cplx> rec2_coefficients(std::span<const cplx> t, int n, int m, cplx q, cplx z, cplx p) {
  const int len = static_cast<int>(t.size());
  std::vector<cplx> c;
  for (int k = 0; k < m + 2; ++k) {
    cplx v = 1.0 / (t[k] * std::pow(theta_pm(t[k] / q, z, p), n));
    for (int i = m + 2; i < len; ++i) v *= theta(t[i] * t[k] / q, p);
    for (int i = 0; i < m + 2; ++i)
      if (i != k) v /= theta(t[i] / t[k], p);
    c.push_back(v);
  }
  return c;
}

cplx g_function(std::span<const cplx> t, std::span<const cplx> v, cplx z, const BasePair& base) {
  const cplx p = base.p(), pq = base.pq();
  auto half = [&](cplx w) {
    cplx num = 1, den = w * theta(w * w, p);
    for (cplx x : v) num *= theta(x * w, p);
    for (cplx x : t) den *= theta(pq * w / x, p);
    return num / den;
  };
  return half(z) + half(1.0 / z);
}

namespace {

int param_count(NM nm) { return 2 * nm.first + 2 * nm.second + 4; }

// Coefficients theta_p(t_i t_j^{+-1}) over the first k parameters.
void guard_pairs(std::span<const cplx> t, int k, cplx p) {
  require_untied<double>(t.first(k));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) require_off_lattice_all({t[i] * t[j], t[i] / t[j]}, p);
}

// The determinant route needs untied, off-lattice a and b groups.
void guard_det(std::span<const cplx> t, int n, const BasePair& b) {
  if (n < 2) return;
  guard_pairs(t, n, b.p());
  guard_pairs(t.subspan(n), n, b.q());
}

Draw rec1_draw(Sampler& s, NM nm) {
  return s.draw([&] {
    Draw d = start(s, nm);
    const cplx p = d.base.p();
    d.t = s.balanced(repeat({0.1, 0.93}, param_count(nm)), int_pow(d.base.pq(), d.m) * p);
    guard_pairs(d.t, d.n + 2, p);
    for (int i = 0; i < d.n + 2; ++i) guard_det(with(d.t, {{i, d.base.q()}}), d.n, d.base);
    return d;
  });
}

Draw rec2_draw(Sampler& s, NM nm) {
  return s.draw([&] {
    Draw d = start(s, nm);
    const cplx p = d.base.p(), q = d.base.q();
    const double Q = std::abs(q);
    const int len = param_count(nm);
    d.t = s.balanced(concat({repeat({0.2 * Q, 0.9 * Q}, d.m + 2), repeat({0.1, 0.93}, len - d.m - 2)}),
                     int_pow(d.base.pq(), d.m + 1) * q);
    require_untied<double>(std::span<const cplx>(d.t).first(d.m + 2));
    for (int k = 0; k < d.m + 2; ++k) {
      for (int i = 0; i < d.m + 2; ++i)
        if (i != k) require_off_lattice(d.t[i] / d.t[k], p);
      guard_det(with(d.t, {{k, 1.0 / q}}), d.n, d.base);
    }
    return d;
  });
}

Residual recurrence1_residual(Eval& ev, const Draw& d) {
  const cplx q = d.base.q(), p = d.base.p();
  std::vector<cplx> terms;
  for (int i = 0; i < d.n + 2; ++i) {
    cplx c = d.t[i];
    for (int j = 0; j < d.n + 2; ++j)
      if (j != i) c /= theta_pm(d.t[i], d.t[j], p);
    terms.push_back(c * ev.I(d.n, d.m, with(d.t, {{i, q}}), d.base));
  }
  return vanishing(terms);
}

Residual recurrence2_residual(Eval& ev, const Draw& d) {
  const cplx q = d.base.q(), p = d.base.p();
  const int len = static_cast<int>(d.t.size());
  std::vector<cplx> terms;
  for (int k = 0; k < d.m + 2; ++k) {
    cplx c = 1.0 / d.t[k];
    for (int i = d.m + 2; i < len; ++i) c *= theta(d.t[i] * d.t[k] / q, p);
    for (int i = 0; i < d.m + 2; ++i)
      if (i != k) c /= theta(d.t[i] / d.t[k], p);
    terms.push_back(c * ev.I(d.n, d.m, with(d.t, {{k, 1.0 / q}}), d.base));
  }
  return vanishing(terms);
}

// g-function draws: t = first m+2 parameters, v = the rest, z in aux.
Draw g_draw(Sampler& s, NM nm) {
  return s.draw([&] {
    Draw d = start(s, nm);
    const int m = d.m;
    const cplx p = d.base.p(), q = d.base.q(), pq = d.base.pq();
    const double Q = std::abs(q);
    d.t = s.balanced(concat({repeat({0.2 * Q, 0.9 * Q}, m + 2), repeat({0.1, 0.93}, m + 4)}),
                     int_pow(pq, m + 1) * q);
    const cplx z = s.rng().polar(0.6, 1.4);
    d.aux = {z};
    require_untied<double>(std::span<const cplx>(d.t).first(m + 2));
    for (int i = 0; i < m + 2; ++i)
      for (int j = 0; j < m + 2; ++j)
        if (i != j) require_off_lattice(d.t[j] / d.t[i], p);
    for (cplx w : {z, 1.0 / z, p * z, 1.0 / (p * z)}) {
      require_off_lattice(w * w, p);
      for (int i = 0; i < m + 2; ++i) require_off_lattice(pq * w / d.t[i], p);
    }
    return d;
  });
}

struct GParts {
  std::span<const cplx> t, v;
};

GParts g_parts(const Draw& d) {
  const std::span<const cplx> all(d.t);
  return {all.first(d.m + 2), all.subspan(d.m + 2)};
}

// Zero-mode draws: prod t = (pq)^(m+2), one parameter outside the unit circle.
Draw zero_mode_draw(Sampler& s, NM nm) {
  return s.draw([&] {
    Draw d = start(s, nm);
    const int m = d.m;
    const cplx p = d.base.p(), q = d.base.q();
    const double P = std::abs(p), Q = std::abs(q), big = std::max(P, Q);
    d.t = s.balanced(concat({repeat({0.3 * Q, 0.9 * Q}, m + 2), repeat({0.3 * P, 0.9 * P}, m + 2),
                             {{0.3, 0.9}, {1.08, 0.9 / big}}}),
                     int_pow(d.base.pq(), m + 2));
    require_untied<double>(std::span<const cplx>(d.t).first(m + 2));
    for (int i = 0; i < m + 2; ++i)
      for (int k = 0; k < m + 2; ++k)
        if (i != k) require_off_lattice(d.t[i] / d.t[k], p);
    const auto mat_t = [&](int k, int l) { return with(d.t, {{k, 1.0 / q}, {m + 2 + l, 1.0 / p}}); };
    for (int k = 0; k < m + 2; ++k)
      for (int l = 0; l < m + 2; ++l) {
        const auto t = mat_t(k, l);
        for (std::size_t j = 0; j < t.size(); ++j)
          if (std::abs(t[j]) > 1) crossing_term(t, j, d.base);
      }
    return d;
  });
}

struct ZeroMode {
  CMat m;
  CVec v;
};

ZeroMode zero_mode_system(Eval& ev, const Draw& d) {
  const int k = d.m + 2, len = static_cast<int>(d.t.size());
  const cplx p = d.base.p(), q = d.base.q();
  ZeroMode z{CMat(k, k), CVec(k)};
  for (int a = 0; a < k; ++a) {
    for (int l = 0; l < k; ++l)
      z.m(a, l) = ev.I_continued(d.m, with(d.t, {{a, 1.0 / q}, {k + l, 1.0 / p}}), d.base);
    cplx v = 1;
    for (int i = k; i < len; ++i) v *= theta(d.t[i] * d.t[a] / q, p);
    for (int i = 0; i < k; ++i)
      if (i != a) v /= theta(d.t[i] / d.t[a], p);
    z.v(a) = v;
  }
  return z;
}

Draw product_draw(Sampler& s, NM nm, Window w, int extra_power) {
  return s.draw([&] {
    Draw d = start(s, nm);
    d.t = s.balanced(repeat(w, param_count(nm)), int_pow(d.base.pq(), d.m + 1 + extra_power));
    guard_det(d.t, d.n, d.base);
    return d;
  });
}

Draw in0_draw(Sampler& s, NM nm) {
  return s.draw([&] {
    Draw d = product_draw(s, nm, {0.2, 0.8}, 0);
    pair_product(d.t, d.base);
    return d;
  });
}

Draw trafo_draw(Sampler& s, NM nm) {
  return s.draw([&] {
    Draw d = start(s, nm);
    const cplx pq = d.base.pq(), sp = std::sqrt(pq);
    d.t = s.balanced(repeat({std::abs(sp) / 0.9, 0.85}, param_count(nm)), int_pow(pq, d.m + 1));
    guard_det(d.t, d.n, d.base);
    std::vector<cplx> dual;
    for (cplx x : d.t) dual.push_back(sp / x);
    guard_det(dual, d.m, d.base);
    pair_product(d.t, d.base);
    return d;
  });
}

// Big determinant: rows and columns are m-subsets; entry (R, S) shifts t_r (r in R) by p
// and t_{n+m+s} (s in S) by q.
std::vector<cplx> big_det_params(const Draw& d, const std::vector<int>& R, const std::vector<int>& S) {
  const int k = d.n + d.m;
  auto t = d.t;
  for (int r : R) t[r] *= d.base.p();
  for (int s : S) t[k + s] *= d.base.q();
  return t;
}

Draw big_det_draw(Sampler& s, NM nm) {
  return s.draw([&] {
    Draw d = start(s, nm);
    d.t = s.balanced(repeat({0.1, 0.85}, param_count(nm)), d.base.pq());
    const int k = d.n + d.m;
    guard_pairs(d.t, k, d.base.q());
    guard_pairs(std::span<const cplx>(d.t).subspan(k), k, d.base.p());
    for (const auto& R : colex_subsets(k, d.m))
      for (const auto& S : colex_subsets(k, d.m)) guard_det(big_det_params(d, R, S), d.n, d.base);
    pair_product(d.t, d.base);
    return d;
  });
}

// Parameter inversion: t_i -> p^{a_i}/t_i, q -> 1/q, and z -> p^{1/2} z for half-integer a.
std::vector<cplx> inverted(const Draw& d, const std::vector<cplx>& t) {
  const cplx sp = std::sqrt(d.base.p());
  std::vector<cplx> out;
  for (std::size_t i = 0; i < t.size(); ++i) out.push_back(std::pow(sp, 2.0 * d.a[i]) / t[i]);
  return out;
}

bool integral_exponents(const Draw& d) {
  return std::all_of(d.a.begin(), d.a.end(), [](double a) { return a == std::round(a); });
}

void guard_rec_coefficients(std::span<const cplx> t, int n, int m, cplx q, cplx z, cplx p) {
  guard_pairs(t, n + 2, p);
  require_untied<double>(t.first(m + 2));
  for (int k = 0; k < m + 2; ++k) {
    require_off_lattice_all({t[k] * z / q, t[k] / (q * z)}, p);
    for (int i = 0; i < m + 2; ++i)
      if (i != k) require_off_lattice(t[i] / t[k], p);
  }
}

Draw q_inversion_draw(Sampler& s, NM nm) {
  return s.draw([&] {
    Draw d = start(s, nm);
    const int len = param_count(nm);
    const cplx p = d.base.p(), q = d.base.q();
    d.t = s.balanced(repeat({0.3, 1.2}, len), int_pow(d.base.pq(), d.m) * p);
    const cplx z = s.rng().polar(0.6, 1.4);
    d.aux = {z};
    const double offset = s.rng().uniform() < 0.5 ? 0.5 : 0.0;
    double sum = 0;
    for (int i = 0; i + 1 < len; ++i) {
      d.a.push_back(s.rng().integer(-1, 1) + offset);
      sum += d.a.back();
    }
    d.a.push_back(2.0 * d.m + 2.0 - sum);
    const cplx z2 = integral_exponents(d) ? z : std::sqrt(p) * z;
    const auto t2 = with(d.t, {{len - 1, q * q}});
    guard_rec_coefficients(d.t, d.n, d.m, q, z, p);
    guard_rec_coefficients(t2, d.n, d.m, q, z, p);
    guard_rec_coefficients(inverted(d, d.t), d.n, d.m, 1.0 / q, z2, p);
    guard_rec_coefficients(inverted(d, t2), d.n, d.m, 1.0 / q, z2, p);
    return d;
  });
}

constexpr double kSingle = 1e-8;
constexpr double kProducts = 1e-6;
constexpr double kAlgebraic = 1e-11;

double recurrence_tol(const Draw& d) { return d.n == 1 && d.m == 0 ? kSingle : kProducts; }

}  // namespace

IdentityReport check_recurrence1(const Draw& d, const CheckOptions& opt) {
  Eval ev{opt};
  const auto r = recurrence1_residual(ev, d);
  return report("recurrence1", d, r, tol_or(opt, kProducts), ev.nodes);
}

IdentityReport check_recurrence_univariate(const Draw& d, const CheckOptions& opt) {
  Eval ev{opt};
  const auto r = recurrence2_residual(ev, d);
  return report("recurrence-univariate", d, r, tol_or(opt, recurrence_tol(d)), ev.nodes);
}

IdentityReport check_recurrence2(const Draw& d, const CheckOptions& opt) {
  Eval ev{opt};
  const auto r = recurrence2_residual(ev, d);
  return report("recurrence2", d, r, tol_or(opt, kProducts), ev.nodes);
}

IdentityReport check_g_symmetry(const Draw& d, const CheckOptions& opt) {
  const auto [t, v] = g_parts(d);
  const cplx z = d.aux.at(0);
  const auto r = compare(g_function(t, v, 1.0 / z, d.base), g_function(t, v, z, d.base));
  return report("g-symmetry", d, r, tol_or(opt, kAlgebraic), 0);
}

IdentityReport check_g_quasi_periodicity(const Draw& d, const CheckOptions& opt) {
  const auto [t, v] = g_parts(d);
  const cplx z = d.aux.at(0), p = d.base.p();
  const auto r = compare(g_function(t, v, p * z, d.base), p * z * z * g_function(t, v, z, d.base));
  return report("g-quasi-periodicity", d, r, tol_or(opt, kAlgebraic), 0);
}

IdentityReport check_g_partial_fractions(const Draw& d, const CheckOptions& opt) {
  const auto [t, v] = g_parts(d);
  const cplx z = d.aux.at(0), p = d.base.p(), q = d.base.q(), pq = d.base.pq();
  cplx pf = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    cplx alpha = q / t[i];
    for (cplx x : v) alpha *= theta(x * t[i] / q, p);
    for (std::size_t j = 0; j < t.size(); ++j)
      if (j != i) alpha /= theta(t[j] / t[i], p);
    pf += alpha / theta_product({pq * z / t[i], pq / (z * t[i])}, p);
  }
  const auto r = compare(pf, g_function(t, v, z, d.base));
  return report("g-partial-fractions", d, r, tol_or(opt, 1e-10), 0);
}

IdentityReport check_g_vanishing(const Draw& d, const CheckOptions& opt) {
  const auto [t, v] = g_parts(d);
  // Off-grid phase: the two halves of g are separately singular at z = +-1.
  const Contour circle{1.0, 0.1234};
  const auto f = [&](cplx z) { return g_function(t, v, z, d.base) * univariate_density(z, d.t, d.base); };
  const auto modulus = [&](cplx z) { return cplx(std::abs(f(z))); };
  // The value itself is zero, so convergence is judged against the mass of |g density|.
  QuadSpec rough = opt.quad;
  rough.n_max = rough.n0;
  QuadSpec spec = opt.quad;
  spec.abs_floor = std::max(contour_integrate(modulus, circle, rough).value.real(), kFloor);
  const auto res = contour_integrate(f, circle, spec);
  if (!res.converged) throw Error(ErrorKind::non_convergent, "g-vanishing integral did not converge");
  QuadSpec fixed = opt.quad;
  fixed.n0 = fixed.n_max = static_cast<int>(res.nodes_used);
  const auto mass = contour_integrate(modulus, circle, fixed);
  const double s = std::max(mass.value.real(), kFloor);
  const Residual r{std::abs(res.value) / s, s};
  return report("g-vanishing", d, r, tol_or(opt, kSingle), res.nodes_used + mass.nodes_used);
}

IdentityReport check_zero_mode(const Draw& d, const CheckOptions& opt) {
  Eval ev{opt};
  const auto z = zero_mode_system(ev, d);
  Residual r{0, kFloor};
  for (Eigen::Index l = 0; l < z.m.cols(); ++l) {
    std::vector<cplx> terms;
    for (Eigen::Index k = 0; k < z.m.rows(); ++k) terms.push_back(z.v(k) * z.m(k, l));
    r = worst({r, vanishing(terms)});
  }
  return report("zero-mode", d, r, tol_or(opt, 1e-7), ev.nodes);
}

IdentityReport check_zero_mode_det(const Draw& d, const CheckOptions& opt) {
  Eval ev{opt};
  const auto z = zero_mode_system(ev, d);
  double norms = 1;
  for (Eigen::Index k = 0; k < z.m.rows(); ++k) norms *= z.m.row(k).norm();
  norms = std::max(norms, kFloor);
  const Residual r{std::abs(determinant(z.m).value) / norms, norms};
  return report("zero-mode-det", d, r, tol_or(opt, kProducts), ev.nodes);
}

IdentityReport check_in0_evaluation(const Draw& d, const CheckOptions& opt) {
  Eval ev{opt};
  const cplx rhs = pair_product(d.t, d.base);
  Residual r = compare(ev.I(d.n, 0, d.t, d.base), rhs);
  if (d.n == 2) r = worst({r, compare(ev.direct(2, 0, d.t, d.base), rhs)});
  return report("in0-evaluation", d, r, tol_or(opt, d.n == 1 ? kSingle : kProducts), ev.nodes);
}

IdentityReport check_transformation(const Draw& d, const CheckOptions& opt) {
  Eval ev{opt};
  const cplx sp = std::sqrt(d.base.pq());
  std::vector<cplx> dual;
  for (cplx x : d.t) dual.push_back(sp / x);
  const cplx lhs = ev.I(d.n, d.m, d.t, d.base);
  const cplx rhs = pair_product(d.t, d.base) * ev.I(d.m, d.n, dual, d.base);
  const double tol = d.n == 1 && d.m == 1 ? 1e-7 : kProducts;
  return report("trafo", d, compare(lhs, rhs), tol_or(opt, tol), ev.nodes);
}

IdentityReport check_big_determinant(const Draw& d, const CheckOptions& opt) {
  Eval ev{opt};
  const int k = d.n + d.m;
  const auto sets = colex_subsets(k, d.m);
  const auto dim = static_cast<Eigen::Index>(sets.size());
  CMat big(dim, dim);
  for (Eigen::Index R = 0; R < dim; ++R)
    for (Eigen::Index S = 0; S < dim; ++S)
      big(R, S) = ev.I(d.n, d.m, big_det_params(d, sets[R], sets[S]), d.base);
  const cplx p = d.base.p(), q = d.base.q();
  cplx pre = 1;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      pre *= d.t[j] * theta_pm(d.t[i], d.t[j], q) * d.t[k + j] * theta_pm(d.t[k + i], d.t[k + j], p);
  const cplx rhs = std::pow(pre, double(binomial(k - 2, d.m - 1))) *
                   std::pow(pair_product(d.t, d.base), double(binomial(k - 1, d.m)));
  return report("big-determinant", d, compare(determinant(big).value, rhs), tol_or(opt, kProducts),
                ev.nodes);
}

IdentityReport check_q_inversion_invariance(const Draw& d, const CheckOptions& opt) {
  const cplx p = d.base.p(), q = d.base.q(), z = d.aux.at(0);
  const int len = static_cast<int>(d.t.size());
  if (std::ssize(d.a) != len) throw Error(ErrorKind::invalid_argument, "exponent vector length");
  const double sum = std::accumulate(d.a.begin(), d.a.end(), 0.0);
  if (std::abs(sum - (2.0 * d.m + 2.0)) > 1e-12)
    throw Error(ErrorKind::invalid_argument, "exponents must sum to 2m+2");
  const cplx z2 = integral_exponents(d) ? z : std::sqrt(p) * z;
  auto ratio_spread = [](const std::vector<cplx>& a, const std::vector<cplx>& b) {
    const cplx r0 = a[0] / b[0];
    double dev = 0;
    for (std::size_t i = 1; i < a.size(); ++i) dev = std::max(dev, std::abs(a[i] / b[i] - r0));
    const double s = std::max(std::abs(r0), kFloor);
    return Residual{dev / s, s};
  };
  // First-recurrence data has prod t = (pq)^m p; the second recurrence needs (pq)^(m+1) q.
  const auto t2 = with(d.t, {{len - 1, q * q}});
  const auto r1 = ratio_spread(rec1_coefficients(inverted(d, d.t), d.n, z2, p),
                               rec1_coefficients(d.t, d.n, z, p));
  const auto r2 = ratio_spread(rec2_coefficients(inverted(d, t2), d.n, d.m, 1.0 / q, z2, p),
                               rec2_coefficients(t2, d.n, d.m, q, z, p));
  return report("q-inversion", d, worst({r1, r2}), tol_or(opt, kAlgebraic), 0);
}

IdentityReport check_heine(const Draw& d, const CheckOptions& opt) {
  Eval ev{opt};
  const auto r = compare(ev.I(d.n, d.m, d.t, d.base), ev.direct(d.n, d.m, d.t, d.base));
  return report("heine", d, r, tol_or(opt, kProducts), ev.nodes);
}

IdentityReport check_det_assignment(const Draw& d, const CheckOptions& opt) {
  Eval ev{opt};
  const TypeIParams params(d.n, d.m, d.t, d.base, Normalize::none);
  std::vector<int> a, b;
  for (int i = 0; i < d.n; ++i) {
    a.push_back(d.n + i);
    b.push_back(i);
  }
  const auto swapped_det = inm_det(params, opt.quad, a, b);
  ev.nodes += swapped_det.nodes_used;
  const auto r = compare(ev.I(d.n, d.m, d.t, d.base), swapped_det.value);
  return report("det-assignment", d, r, tol_or(opt, kSingle), ev.nodes);
}

namespace checks {

void register_multivariate(Registry& r) {
  r.push_back({"recurrence1", "(n+2)-term recurrence under q-shifts", {{1, 0}, {2, 0}, {1, 1}, {2, 1}},
               rec1_draw, check_recurrence1});
  r.push_back({"recurrence-univariate", "(m+2)-term recurrence for I_1^(m)", {{1, 0}, {1, 1}},
               rec2_draw, check_recurrence_univariate});
  r.push_back({"recurrence2", "(m+2)-term recurrence for I_2^(m)", {{2, 0}, {2, 1}}, rec2_draw,
               check_recurrence2});
  r.push_back({"g-symmetry", "g(1/z) = g(z)", {{1, 1}, {1, 2}}, g_draw, check_g_symmetry});
  r.push_back({"g-quasi-periodicity", "g(pz) = p z^2 g(z)", {{1, 1}, {1, 2}}, g_draw,
               check_g_quasi_periodicity});
  r.push_back({"g-partial-fractions", "g equals its partial-fraction expansion", {{1, 1}, {1, 2}},
               g_draw, check_g_partial_fractions});
  r.push_back({"g-vanishing", "g integrates to zero against the I_1^(m) density", {{1, 1}, {1, 2}},
               g_draw, check_g_vanishing});
  r.push_back({"zero-mode", "left kernel vector of the shifted-integral matrix", {{1, 0}, {1, 1}},
               zero_mode_draw, check_zero_mode});
  r.push_back({"zero-mode-det", "the shifted-integral matrix is singular", {{1, 0}, {1, 1}},
               zero_mode_draw, check_zero_mode_det});
  r.push_back({"in0-evaluation", "I_n^(0) as a product of Gamma values", {{1, 0}, {2, 0}}, in0_draw,
               check_in0_evaluation});
  r.push_back({"trafo", "I_n^(m)(t) against I_m^(n)(sqrt(pq)/t)",
               {{1, 1}, {2, 1}, {1, 2}, {1, 0}, {2, 0}}, trafo_draw, check_transformation});
  r.push_back({"big-determinant", "determinant of shifted I_n^(m) values", {{1, 1}, {1, 2}, {2, 1}},
               big_det_draw, check_big_determinant});
  r.push_back({"q-inversion", "recurrence coefficients under t -> p^a/t, q -> 1/q",
               {{1, 1}, {2, 1}, {1, 0}, {1, 2}}, q_inversion_draw, check_q_inversion_invariance});
  r.push_back({"heine", "determinant route against tensor quadrature", {{2, 0}, {2, 1}},
               [](Sampler& s, NM nm) { return product_draw(s, nm, {0.2, 0.8}, 0); }, check_heine});
  r.push_back({"det-assignment", "determinant route with a and b groups exchanged", {{2, 0}, {2, 1}},
               [](Sampler& s, NM nm) {
                 return s.draw([&] {
                   Draw d = product_draw(s, nm, {0.2, 0.8}, 0);
                   guard_pairs(std::span<const cplx>(d.t).subspan(d.n), d.n, d.base.p());
                   guard_pairs(d.t, d.n, d.base.q());
                   return d;
                 });
               },
               check_det_assignment});
}

}  // namespace checks
}  // namespace ehi
