#pragma once

// Infinite q-products, the theta function theta_p(z) = (z;p)(p/z;p) and the
// elliptic gamma function, all as truncated products. Everything here is a
// header-only template on the real scalar type; the rest of the library uses
// the double instantiation.

#include <cmath>
#include <complex>
#include <initializer_list>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "ehi/error.hpp"

namespace ehi {

using cplx = std::complex<double>;

struct TruncationPolicy {
  double eps_trunc = 1e-17;
  int max_terms = 512;

  void validate() const {
    if (!(eps_trunc > 0 && eps_trunc < 1e-6) || max_terms < 8)
      throw Error(ErrorKind::invalid_argument,
                  "truncation policy needs 0 < eps_trunc < 1e-6 and max_terms >= 8");
  }
};

template <typename Real>
class BasicBasePair {
 public:
  using complex_type = std::complex<Real>;

  BasicBasePair(complex_type p, complex_type q) : p_(p), q_(q) {
    if (!(std::abs(p) < 1) || !(std::abs(q) < 1))
      throw Error(ErrorKind::domain, "bases need |p| < 1 and |q| < 1");
  }

  const complex_type& p() const noexcept { return p_; }
  const complex_type& q() const noexcept { return q_; }
  complex_type pq() const noexcept { return p_ * q_; }
  BasicBasePair swapped() const { return {q_, p_}; }

  // Sampling guard only: p and q must not coincide in modulus and phase.
  bool generic(Real tol = Real(1e-9)) const {
    return std::abs(std::abs(p_) - std::abs(q_)) > tol ||
           std::abs(std::arg(p_ / q_)) > tol;
  }

 private:
  complex_type p_, q_;
};

using BasePair = BasicBasePair<double>;

template <typename Real>
struct TruncatedProduct {
  std::complex<Real> value;
  int terms = 0;
  bool cap_hit = false;
};

namespace detail {

// std::complex multiplication goes through the C99 Annex G slow path unless
// the compiler is told otherwise; the product loops below are hot enough that
// the plain formula matters.
template <typename Real>
inline std::complex<Real> mul(const std::complex<Real>& a, const std::complex<Real>& b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

template <typename Real>
inline Real norm2(const std::complex<Real>& a) {
  return a.real() * a.real() + a.imag() * a.imag();
}

}  // namespace detail

template <typename Real>
TruncatedProduct<Real> qpochhammer_inf_ex(std::complex<Real> z, std::complex<Real> p,
                                          const TruncationPolicy& policy = {}) {
  if (!(std::abs(p) < 1)) throw Error(ErrorKind::non_convergent, "(z;p) needs |p| < 1");
  const Real cut = Real(policy.eps_trunc) * Real(policy.eps_trunc);
  TruncatedProduct<Real> out{std::complex<Real>(1), 0, false};
  std::complex<Real> w = z;
  while (detail::norm2(w) >= cut) {
    if (out.terms == policy.max_terms) {
      out.cap_hit = true;
      break;
    }
    out.value = detail::mul(out.value, std::complex<Real>(1) - w);
    w = detail::mul(w, p);
    ++out.terms;
  }
  return out;
}

template <typename Real>
std::complex<Real> qpochhammer_inf(std::complex<Real> z, std::complex<Real> p,
                                   const TruncationPolicy& policy = {}) {
  return qpochhammer_inf_ex(z, p, policy).value;
}

template <typename Real>
std::complex<Real> theta(std::complex<Real> z, std::complex<Real> p,
                         const TruncationPolicy& policy = {}) {
  if (z == std::complex<Real>(0)) throw Error(ErrorKind::domain, "theta at z = 0");
  return detail::mul(qpochhammer_inf(z, p, policy), qpochhammer_inf(p / z, p, policy));
}

// Pole guard: relative distance of z to the lattice p^{-j} q^{-k}.
inline constexpr double kPoleDelta = 1e-6;

template <typename Real>
TruncatedProduct<Real> elliptic_gamma_ex(std::complex<Real> z, const BasicBasePair<Real>& base,
                                         const TruncationPolicy& policy = {},
                                         Real pole_delta = Real(kPoleDelta)) {
  using C = std::complex<Real>;
  if (z == C(0)) throw Error(ErrorKind::domain, "elliptic gamma at z = 0");
  const C p = base.p(), q = base.q();
  const Real cut = Real(policy.eps_trunc) * Real(policy.eps_trunc);
  const Real guard = pole_delta * pole_delta;
  C num(1), den(1);
  C a = z, b = base.pq() / z;
  TruncatedProduct<Real> out;
  int j = 0;
  while (detail::norm2(a) >= cut || detail::norm2(b) >= cut) {
    if (j == policy.max_terms) {
      out.cap_hit = true;
      break;
    }
    C aa = a, bb = b;
    int k = 0;
    while (detail::norm2(aa) >= cut || detail::norm2(bb) >= cut) {
      if (k == policy.max_terms) {
        out.cap_hit = true;
        break;
      }
      const C d = C(1) - aa;
      if (detail::norm2(d) < guard)
        throw Error(ErrorKind::pole_proximity,
                    "elliptic gamma argument within " + std::to_string(double(pole_delta)) +
                        " of the pole lattice");
      den = detail::mul(den, d);
      num = detail::mul(num, C(1) - bb);
      aa = detail::mul(aa, q);
      bb = detail::mul(bb, q);
      ++k;
    }
    out.terms += k;
    a = detail::mul(a, p);
    b = detail::mul(b, p);
    ++j;
  }
  out.value = num / den;
  return out;
}

template <typename Real>
std::complex<Real> elliptic_gamma(std::complex<Real> z, const BasicBasePair<Real>& base,
                                  const TruncationPolicy& policy = {}) {
  return elliptic_gamma_ex(z, base, policy).value;
}

// Compound argument t * z_1^{+-1} * ... * z_k^{+-1}, expanding to 2^k factors.
template <typename Real>
struct PmArg {
  std::complex<Real> t;
  std::vector<std::complex<Real>> z;
};

template <typename Real>
PmArg<Real> pm(std::complex<Real> t, std::complex<Real> z) {
  return {t, {z}};
}

template <typename Real>
PmArg<Real> pm(std::complex<Real> t, std::complex<Real> z1, std::complex<Real> z2) {
  return {t, {z1, z2}};
}

template <typename Real>
std::vector<std::complex<Real>> expand(const PmArg<Real>& arg) {
  std::vector<std::complex<Real>> out{arg.t};
  for (const auto& zi : arg.z) {
    if (zi == std::complex<Real>(0)) throw Error(ErrorKind::domain, "zero in compound argument");
    const std::size_t half = out.size();
    out.reserve(2 * half);
    for (std::size_t i = 0; i < half; ++i) {
      out.push_back(out[i] / zi);
      out[i] *= zi;
    }
  }
  return out;
}

template <typename Real>
std::complex<Real> theta_product(std::span<const std::complex<Real>> args, std::complex<Real> p,
                                 const TruncationPolicy& policy = {}) {
  std::complex<Real> r(1);
  for (const auto& a : args) r *= theta(a, p, policy);
  return r;
}

inline cplx theta_product(std::initializer_list<cplx> args, cplx p,
                          const TruncationPolicy& policy = {}) {
  return theta_product<double>(std::span<const cplx>(args.begin(), args.size()), p, policy);
}

template <typename Real>
std::complex<Real> gamma_product(std::span<const std::complex<Real>> args,
                                 const BasicBasePair<Real>& base,
                                 const TruncationPolicy& policy = {}) {
  std::complex<Real> r(1);
  for (const auto& a : args) r *= elliptic_gamma(a, base, policy);
  return r;
}

inline cplx gamma_product(std::initializer_list<cplx> args, const BasePair& base,
                          const TruncationPolicy& policy = {}) {
  return gamma_product<double>(std::span<const cplx>(args.begin(), args.size()), base, policy);
}

template <typename Real>
std::complex<Real> theta_compound(std::span<const PmArg<Real>> spec, std::complex<Real> p,
                                  const TruncationPolicy& policy = {}) {
  std::complex<Real> r(1);
  for (const auto& arg : spec)
    for (const auto& a : expand(arg)) r *= theta(a, p, policy);
  return r;
}

template <typename Real>
std::complex<Real> theta_compound(std::initializer_list<PmArg<Real>> spec, std::complex<Real> p,
                                  const TruncationPolicy& policy = {}) {
  return theta_compound<Real>(std::span<const PmArg<Real>>(spec.begin(), spec.size()), p, policy);
}

template <typename Real>
std::complex<Real> gamma_compound(std::span<const PmArg<Real>> spec,
                                  const BasicBasePair<Real>& base,
                                  const TruncationPolicy& policy = {}) {
  std::complex<Real> r(1);
  for (const auto& arg : spec)
    for (const auto& a : expand(arg)) r *= elliptic_gamma(a, base, policy);
  return r;
}

template <typename Real>
std::complex<Real> gamma_compound(std::initializer_list<PmArg<Real>> spec,
                                  const BasicBasePair<Real>& base,
                                  const TruncationPolicy& policy = {}) {
  return gamma_compound<Real>(std::span<const PmArg<Real>>(spec.begin(), spec.size()), base,
                              policy);
}

// theta_p(t z^{+-1}) = theta_p(tz) theta_p(t/z)
template <typename Real>
std::complex<Real> theta_pm(std::complex<Real> t, std::complex<Real> z, std::complex<Real> p,
                            const TruncationPolicy& policy = {}) {
  return theta(t * z, p, policy) * theta(t / z, p, policy);
}

template <typename Real>
std::complex<Real> gamma_pm(std::complex<Real> t, std::complex<Real> z,
                            const BasicBasePair<Real>& base, const TruncationPolicy& policy = {}) {
  return elliptic_gamma(t * z, base, policy) * elliptic_gamma(t / z, base, policy);
}

// A vanishing sum together with the size of its largest term.
template <typename Real>
struct SumResidual {
  std::complex<Real> value;
  Real scale = 0;

  Real relative() const { return scale > 0 ? std::abs(value) / scale : std::abs(value); }
};

template <typename Real>
SumResidual<Real> sum_residual(std::span<const std::complex<Real>> terms) {
  SumResidual<Real> out{std::complex<Real>(0), Real(0)};
  for (const auto& x : terms) {
    out.value += x;
    out.scale = std::max(out.scale, std::abs(x));
  }
  return out;
}

inline constexpr double kTieDelta = 1e-3;

template <typename Real>
SumResidual<Real> theta_addition_residual(std::complex<Real> t1, std::complex<Real> t2,
                                          std::complex<Real> t3, std::complex<Real> z,
                                          std::complex<Real> p,
                                          const TruncationPolicy& policy = {}) {
  auto term = [&](std::complex<Real> a, std::complex<Real> b, std::complex<Real> c) {
    return a * theta_pm(b, a, p, policy) * theta_pm(c, z, p, policy);
  };
  const std::complex<Real> terms[3] = {term(t3, t2, t1), term(t1, t3, t2), term(t2, t1, t3)};
  return sum_residual<Real>(terms);
}

template <typename Real>
void require_untied(std::span<const std::complex<Real>> t, Real delta = Real(kTieDelta)) {
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j)
      if (i != j && std::abs(t[i] / t[j] - std::complex<Real>(1)) < delta)
        throw Error(ErrorKind::tie_break, "parameters " + std::to_string(i + 1) + " and " +
                                              std::to_string(j + 1) + " nearly coincide");
}

// sum_i t_i prod_j theta_p(t_i z_j^{+-1}) / prod_{j != i} theta_p(t_i t_j^{+-1})
template <typename Real>
SumResidual<Real> recurrence1_kernel_residual(std::span<const std::complex<Real>> t,
                                              std::span<const std::complex<Real>> z,
                                              std::complex<Real> p,
                                              const TruncationPolicy& policy = {}) {
  if (t.size() != z.size() + 2)
    throw Error(ErrorKind::invalid_argument, "kernel relation needs len(t) = len(z) + 2");
  require_untied(t);
  std::vector<std::complex<Real>> terms;
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::complex<Real> num = t[i], den(1);
    for (const auto& zj : z) num *= theta_pm(t[i], zj, p, policy);
    for (std::size_t j = 0; j < t.size(); ++j)
      if (j != i) den *= theta_pm(t[i], t[j], p, policy);
    terms.push_back(num / den);
  }
  return sum_residual<Real>(terms);
}

}  // namespace ehi
