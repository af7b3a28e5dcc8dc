#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ehi/identities.hpp"
#include "ehi/matrixkit.hpp"

namespace ehi::checks {

struct Residual {
  double residual;
  double scale;
};

inline constexpr double kFloor = 1e-300;

inline Residual compare(cplx lhs, cplx rhs) {
  const double s = std::max({std::abs(lhs), std::abs(rhs), kFloor});
  return {std::abs(lhs - rhs) / s, s};
}

// lhs - sum(rhs terms), relative to the largest of |lhs| and the |terms|.
inline Residual compare_sum(cplx lhs, std::initializer_list<cplx> terms) {
  double s = std::max(std::abs(lhs), kFloor);
  cplx d = lhs;
  for (auto x : terms) {
    d -= x;
    s = std::max(s, std::abs(x));
  }
  return {std::abs(d) / s, s};
}

inline Residual vanishing(std::span<const cplx> terms) {
  const auto r = sum_residual<double>(terms);
  const double s = std::max(r.scale, kFloor);
  return {std::abs(r.value) / s, s};
}

inline Residual worst(std::initializer_list<Residual> rs) {
  Residual w{0, kFloor};
  for (const auto& r : rs)
    if (!(r.residual <= w.residual)) w = r;
  return w;
}

inline Residual matrix_residual(const CMat& lhs, const CMat& rhs) {
  const double s = std::max({lhs.cwiseAbs().maxCoeff(), rhs.cwiseAbs().maxCoeff(), kFloor});
  return {(lhs - rhs).cwiseAbs().maxCoeff() / s, s};
}

inline double tol_or(const CheckOptions& opt, double fallback) { return opt.tol > 0 ? opt.tol : fallback; }

inline IdentityReport report(const char* name, const Draw& d, Residual r, double tol,
                             std::int64_t nodes) {
  return make_report(name, d, r.residual, r.scale, tol, nodes);
}

inline cplx product(std::span<const cplx> t) {
  cplx r = 1;
  for (auto x : t) r *= x;
  return r;
}

inline cplx pair_product(std::span<const cplx> t, const BasePair& b) {
  cplx r = 1;
  for (std::size_t j = 0; j < t.size(); ++j)
    for (std::size_t k = j + 1; k < t.size(); ++k) r *= elliptic_gamma(t[j] * t[k], b);
  return r;
}

inline std::vector<cplx> with(std::vector<cplx> t, std::initializer_list<std::pair<int, cplx>> f) {
  for (const auto& [i, x] : f) t[i] *= x;
  return t;
}

// Integral evaluations with node bookkeeping.
struct Eval {
  const CheckOptions& opt;
  std::int64_t nodes = 0;

  cplx take(const QuadResult& r) {
    nodes += r.nodes_used;
    return r.value;
  }

  cplx V(std::span<const cplx> t, const BasePair& b) {
    return take(v_function(VParams(t, b, Normalize::none), opt.quad));
  }

  // I_n^(m); n = 0 is the empty integral, n = 2 goes through the determinant.
  cplx I(int n, int m, std::span<const cplx> t, const BasePair& b) {
    if (n == 0) return 1.0;
    const TypeIParams params(n, m, std::vector<cplx>(t.begin(), t.end()), b, Normalize::none);
    if (n == 1) return take(i1m(params, opt.quad));
    const auto r = inm_det(params, opt.quad);
    nodes += r.nodes_used;
    return r.value;
  }

  cplx I_continued(int m, std::span<const cplx> t, const BasePair& b) {
    const TypeIParams params(1, m, std::vector<cplx>(t.begin(), t.end()), b, Normalize::none);
    return take(i1m_continued(params, opt.quad));
  }

  cplx direct(int n, int m, std::span<const cplx> t, const BasePair& b) {
    const TypeIParams params(n, m, std::vector<cplx>(t.begin(), t.end()), b, Normalize::none);
    return take(inm_direct(params, opt.tensor));
  }
};

inline std::vector<cplx> swapped(std::vector<cplx> t, int i, int j) {
  std::swap(t[i], t[j]);
  return t;
}

// Rejects draws whose (shifted) parameter set leaves the disk of radius `cap`.
inline void require_inside(std::span<const cplx> t, double cap = kShiftedModulusCap) {
  reject_if(!(max_modulus(t) < cap), ErrorKind::contour_invalid,
            "a shifted parameter set leaves the disk of radius " + std::to_string(cap));
}

inline void require_off_lattice_all(std::initializer_list<cplx> xs, cplx p) {
  for (cplx x : xs) require_off_lattice(x, p);
}

inline Draw start(Sampler& s, NM nm) {
  Draw d;
  d.base = s.base();
  d.n = nm.first;
  d.m = nm.second;
  return d;
}

using Registry = std::vector<IdentityInfo>;

void register_specfun(Registry& r);
void register_univariate(Registry& r);
void register_matrix(Registry& r);
void register_multivariate(Registry& r);
void register_linear_algebra(Registry& r);

}  // namespace ehi::checks
