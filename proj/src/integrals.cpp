#include "ehi/integrals.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "ehi/matrixkit.hpp"

namespace ehi {

cplx int_pow(cplx x, int k) {
  cplx r = 1;
  cplx b = k >= 0 ? x : 1.0 / x;
  for (int i = 0; i < std::abs(k); ++i) r *= b;
  return r;
}

namespace {

cplx product(std::span<const cplx> t) {
  cplx r = 1;
  for (const auto& x : t) r *= x;
  return r;
}

void check_balance(std::span<const cplx> t, cplx target, const char* what) {
  const cplx prod = product(t);
  if (std::abs(prod - target) > kBalanceTol * std::abs(target)) {
    std::ostringstream os;
    os << what << ": prod t = " << prod << " but the balancing needs " << target;
    throw Error(ErrorKind::balancing_violated, os.str());
  }
}

std::vector<cplx> normalized(std::vector<cplx> t, cplx target, Normalize normalize,
                             const char* what) {
  if (t.empty()) throw Error(ErrorKind::invalid_argument, std::string(what) + ": no parameters");
  if (normalize == Normalize::last) {
    const cplx rest = product(std::span<const cplx>(t.data(), t.size() - 1));
    if (rest == cplx(0)) throw Error(ErrorKind::domain, std::string(what) + ": zero parameter");
    t.back() = target / rest;
  } else {
    check_balance(t, target, what);
  }
  return t;
}

std::string modulus_list(std::span<const cplx> t) {
  std::ostringstream os;
  os.precision(4);
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? ", " : "") << std::abs(t[i]);
  return os.str();
}

void require_contour(std::span<const cplx> t, const Contour& contour, const std::string& what) {
  if (!circle_contour_valid(t, contour.radius))
    throw Error(ErrorKind::contour_invalid,
                what + ": circle of radius " + std::to_string(contour.radius) +
                    " does not separate the poles (|t| = " + modulus_list(t) + ")");
}

QuadResult scaled(QuadResult r, cplx factor) {
  r.value *= factor;
  r.err_est *= std::abs(factor);
  return r;
}

}  // namespace

TypeIParams::TypeIParams(int n, int m, std::vector<cplx> t, BasePair base, Normalize normalize)
    : n_(n), m_(m), base_(base) {
  if (n < 0 || m < -1)
    throw Error(ErrorKind::invalid_argument, "I_n^(m) needs n >= 0 and m >= -1");
  if (std::ssize(t) != 2 * n + 2 * m + 4)
    throw Error(ErrorKind::invalid_argument,
                "I_" + std::to_string(n) + "^(" + std::to_string(m) + ") needs " +
                    std::to_string(2 * n + 2 * m + 4) + " parameters, got " +
                    std::to_string(t.size()));
  t_ = normalized(std::move(t), int_pow(base.pq(), m + 1), normalize, "I_n^(m) parameters");
}

TypeIParams TypeIParams::swapped_bases() const {
  return TypeIParams(n_, m_, t_, base_.swapped(), Normalize::none);
}

VParams::VParams(std::span<const cplx> t, BasePair base, Normalize normalize) : base_(base) {
  if (t.size() != 8) throw Error(ErrorKind::invalid_argument, "V needs exactly 8 parameters");
  const auto v = normalized(std::vector<cplx>(t.begin(), t.end()), base.pq() * base.pq(),
                            normalize, "V parameters");
  std::copy(v.begin(), v.end(), t_.begin());
}

TypeIParams VParams::to_type1() const {
  return TypeIParams(1, 1, std::vector<cplx>(t_.begin(), t_.end()), base_, Normalize::none);
}

std::vector<cplx> shifted(std::span<const cplx> t, std::span<const ShiftSpec> shifts,
                          const BasePair& base) {
  std::vector<cplx> out(t.begin(), t.end());
  for (const auto& s : shifts) {
    if (s.index < 0 || s.index >= std::ssize(out))
      throw Error(ErrorKind::invalid_argument, "shift index out of range");
    out[s.index] *= int_pow(base.p(), s.p_power) * int_pow(base.q(), s.q_power);
  }
  return out;
}

std::vector<cplx> shifted(std::span<const cplx> t, std::initializer_list<ShiftSpec> shifts,
                          const BasePair& base) {
  return shifted(t, std::span<const ShiftSpec>(shifts.begin(), shifts.size()), base);
}

TypeIParams apply_shifts(const TypeIParams& params, std::span<const ShiftSpec> shifts) {
  return TypeIParams(params.n(), params.m(), shifted(params.t(), shifts, params.base()),
                     params.base(), Normalize::none);
}

VParams apply_shifts(const VParams& params, std::span<const ShiftSpec> shifts) {
  return VParams(shifted(params.t(), shifts, params.base()), params.base(), Normalize::none);
}

cplx kappa(const BasePair& base, int n) {
  const cplx pp = qpochhammer_inf(base.p(), base.p());
  const cplx qq = qpochhammer_inf(base.q(), base.q());
  double denom = 1;
  for (int i = 1; i <= n; ++i) denom *= 2.0 * i;
  return int_pow(pp * qq, n) / denom;
}

cplx univariate_density(cplx z, std::span<const cplx> t, const BasePair& base,
                        const TruncationPolicy& policy) {
  const cplx z2 = z * z;
  cplx f = theta(z2, base.p(), policy) * theta(1.0 / z2, base.q(), policy);
  const cplx zi = 1.0 / z;
  for (const auto& tr : t)
    f *= elliptic_gamma(tr * z, base, policy) * elliptic_gamma(tr * zi, base, policy);
  return f;
}

cplx cross_factor(cplx zi, cplx zj, const BasePair& base, const TruncationPolicy& policy) {
  const cplx s = zi * zj, d = zi / zj;
  return theta(s, base.p(), policy) * theta(1.0 / s, base.q(), policy) *
         theta(d, base.p(), policy) * theta(1.0 / d, base.q(), policy);
}

cplx crossing_term(std::span<const cplx> t, std::size_t j, const BasePair& base,
                   const TruncationPolicy& policy) {
  cplx r = 1.0 / elliptic_gamma(1.0 / (t[j] * t[j]), base, policy);
  for (std::size_t k = 0; k < t.size(); ++k)
    if (k != j) r *= gamma_pm(t[k], t[j], base, policy);
  return r;
}

QuadResult i1m(const TypeIParams& params, const QuadSpec& spec, const Contour& contour) {
  if (params.n() != 1) throw Error(ErrorKind::invalid_argument, "i1m needs n = 1");
  require_contour(params.t(), contour, "I_1^(" + std::to_string(params.m()) + ")");
  const auto& t = params.t();
  const auto& base = params.base();
  auto r = contour_integrate([&](cplx z) { return univariate_density(z, t, base); }, contour, spec);
  return scaled(r, kappa(base));
}

QuadResult i1m_continued(const TypeIParams& params, const QuadSpec& spec) {
  if (params.n() != 1) throw Error(ErrorKind::invalid_argument, "i1m_continued needs n = 1");
  const auto& t = params.t();
  const auto& base = params.base();
  const double big = std::max(std::abs(base.p()), std::abs(base.q()));
  std::vector<std::size_t> outside;
  for (std::size_t j = 0; j < t.size(); ++j) {
    const double a = std::abs(t[j]);
    if (std::abs(a - 1.0) < kContourMargin || (a > 1 && a * big > 1.0 - kContourMargin))
      throw Error(ErrorKind::contour_invalid,
                  "parameter " + std::to_string(j + 1) + " (|t| = " + std::to_string(a) +
                      ") cannot be continued across the unit circle");
    if (a > 1) outside.push_back(j);
  }
  auto r = contour_integrate([&](cplx z) { return univariate_density(z, t, base); }, Contour{},
                             spec);
  r = scaled(r, kappa(base));
  for (auto j : outside) r.value += crossing_term(t, j, base);
  return r;
}

QuadResult v_function(const VParams& params, const QuadSpec& spec, const Contour& contour) {
  return i1m(params.to_type1(), spec, contour);
}

QuadResult w_function(const VParams& params, cplx z, const QuadSpec& spec) {
  cplx norm = 1;
  for (const auto& tj : params.t()) norm *= gamma_pm(tj, z, params.base());
  return scaled(v_function(params, spec), 1.0 / norm);
}

QuadResult u_function(const VParams& params, const QuadSpec& spec) {
  const auto& t = params.t();
  const cplx norm = gamma_pm(t[0], t[2], params.base()) * gamma_pm(t[1], t[2], params.base());
  return scaled(v_function(params, spec), 1.0 / norm);
}

QuadResult inm_direct(const TypeIParams& params, const QuadSpec& spec) {
  const int n = params.n();
  if (n < 1 || n > 2)
    throw Error(ErrorKind::cap_exceeded,
                "direct quadrature is limited to n <= 2, got n = " + std::to_string(n));
  require_contour(params.t(), Contour{}, "I_n^(m) direct");
  const auto& t = params.t();
  const auto& base = params.base();
  auto density = [&](cplx z) { return univariate_density(z, t, base); };
  QuadResult r;
  if (n == 1) {
    r = contour_integrate(density, Contour{}, spec);
  } else {
    r = tensor_integrate(
        density,
        [&](std::span<const cplx> z) {
          cplx c = 1;
          for (std::size_t i = 0; i < z.size(); ++i)
            for (std::size_t j = i + 1; j < z.size(); ++j) c *= cross_factor(z[i], z[j], base);
          return c;
        },
        Contour{}, spec, n);
  }
  return scaled(r, kappa(base, n));
}

InmDetResult inm_det(const TypeIParams& params, const QuadSpec& spec, std::span<const int> a_idx,
                     std::span<const int> b_idx) {
  const int n = params.n();
  const auto& t = params.t();
  const auto& base = params.base();
  std::vector<int> ai(a_idx.begin(), a_idx.end()), bi(b_idx.begin(), b_idx.end());
  if (ai.empty() && bi.empty()) {
    ai.resize(n);
    bi.resize(n);
    std::iota(ai.begin(), ai.end(), 0);
    std::iota(bi.begin(), bi.end(), n);
  }
  if (std::ssize(ai) != n || std::ssize(bi) != n)
    throw Error(ErrorKind::invalid_argument, "inm_det needs n slots for a and for b");
  std::vector<bool> used(t.size(), false);
  for (int k : ai) {
    if (k < 0 || k >= std::ssize(t) || used[k])
      throw Error(ErrorKind::invalid_argument, "inm_det slots must be distinct and in range");
    used[k] = true;
  }
  for (int k : bi) {
    if (k < 0 || k >= std::ssize(t) || used[k])
      throw Error(ErrorKind::invalid_argument, "inm_det slots must be distinct and in range");
    used[k] = true;
  }
  std::vector<cplx> a, b, rest;
  for (int k : ai) a.push_back(t[k]);
  for (int k : bi) b.push_back(t[k]);
  for (std::size_t k = 0; k < t.size(); ++k)
    if (!used[k]) rest.push_back(t[k]);
  require_untied<double>(a);
  require_untied<double>(b);

  InmDetResult out;
  CMat m(n, n);
  double rel_err = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<cplx> e;
      e.push_back(a[i]);
      for (int k = 0; k < n; ++k)
        if (k != i) e.push_back(base.q() * a[k]);
      e.push_back(b[j]);
      for (int k = 0; k < n; ++k)
        if (k != j) e.push_back(base.p() * b[k]);
      e.insert(e.end(), rest.begin(), rest.end());
      const TypeIParams entry(1, params.m() + n - 1, std::move(e), base, Normalize::none);
      if (!circle_contour_valid(entry.t()))
        throw Error(ErrorKind::contour_invalid,
                    "determinant entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        ") has no valid unit circle (|t| = " + modulus_list(entry.t()) + ")");
      const auto r = i1m(entry, spec);
      m(i, j) = r.value;
      out.nodes_used += r.nodes_used;
      out.converged = out.converged && r.converged;
      rel_err = std::max(rel_err, r.err_est / std::max(std::abs(r.value), spec.abs_floor));
    }
  cplx pref = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      pref *= a[j] * theta_pm(a[i], a[j], base.p()) * b[j] * theta_pm(b[i], b[j], base.q());
  const auto det = determinant(m);
  out.value = det.value / pref;
  out.rcond = det.rcond;
  out.err_est = std::abs(out.value) * rel_err * n / std::max(det.rcond, 1e-300);
  return out;
}

QuadResult v_qgt1_solution(std::span<const cplx> t, cplx p, cplx q_big, const QuadSpec& spec,
                           bool flip_branch) {
  if (t.size() != 8) throw Error(ErrorKind::invalid_argument, "the |q| > 1 solution needs 8 parameters");
  if (!(std::abs(q_big) > 1)) throw Error(ErrorKind::domain, "the |q| > 1 solution needs |q| > 1");
  const BasePair inner(p, 1.0 / q_big);
  check_balance(t, p * p * q_big * q_big, "|q| > 1 parameters");
  const cplx sp = flip_branch ? -std::sqrt(p) : std::sqrt(p);
  std::vector<cplx> s;
  for (const auto& x : t) s.push_back(sp / x);
  const VParams vp(s, inner, Normalize::none);
  const cplx norm = gamma_product({p / (t[0] * t[2]), t[2] / t[0], p / (t[1] * t[2]), t[2] / t[1]},
                                  inner);
  return scaled(v_function(vp, spec), 1.0 / norm);
}

}  // namespace ehi
