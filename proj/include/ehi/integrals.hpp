#pragma once

// The integrals themselves: V and its normalizations W and U, the univariate
// I_1^(m), the multivariate I_n^(m) (tensor quadrature or determinant of
// univariate integrals) and the |q| > 1 solution of the difference equation.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "ehi/quadrature.hpp"
#include "ehi/specfun.hpp"

namespace ehi {

inline constexpr double kBalanceTol = 1e-12;

// Multiply parameter `index` (0-based) by p^p_power q^q_power.
struct ShiftSpec {
  int index = 0;
  int p_power = 0;
  int q_power = 0;
};

enum class Normalize { last, none };

cplx int_pow(cplx x, int k);

// Parameters t_1..t_{2n+2m+4} of I_n^(m) with prod t = (pq)^{m+1}.
class TypeIParams {
 public:
  TypeIParams(int n, int m, std::vector<cplx> t, BasePair base,
              Normalize normalize = Normalize::last);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  const std::vector<cplx>& t() const noexcept { return t_; }
  const BasePair& base() const noexcept { return base_; }
  cplx balancing_target() const { return int_pow(base_.pq(), m_ + 1); }

  // Same parameters with p and q exchanged.
  TypeIParams swapped_bases() const;

 private:
  int n_, m_;
  std::vector<cplx> t_;
  BasePair base_;
};

// The eight parameters of V with prod t = (pq)^2.
class VParams {
 public:
  VParams(std::span<const cplx> t, BasePair base, Normalize normalize = Normalize::last);

  const std::array<cplx, 8>& t() const noexcept { return t_; }
  const BasePair& base() const noexcept { return base_; }
  TypeIParams to_type1() const;

 private:
  std::array<cplx, 8> t_;
  BasePair base_;
};

std::vector<cplx> shifted(std::span<const cplx> t, std::span<const ShiftSpec> shifts,
                          const BasePair& base);
std::vector<cplx> shifted(std::span<const cplx> t, std::initializer_list<ShiftSpec> shifts,
                          const BasePair& base);

// The result keeps the target balancing or throws BalancingViolated.
TypeIParams apply_shifts(const TypeIParams& params, std::span<const ShiftSpec> shifts);
VParams apply_shifts(const VParams& params, std::span<const ShiftSpec> shifts);

// kappa_n = (p;p)^n (q;q)^n / (2^n n!)
cplx kappa(const BasePair& base, int n = 1);

// theta_p(z^2) theta_q(z^-2) prod_r Gamma(t_r z^{+-1}), the I_1 integrand
// without kappa. 1/Gamma(z^{+-2}) is written in its entire form.
cplx univariate_density(cplx z, std::span<const cplx> t, const BasePair& base,
                        const TruncationPolicy& policy = {});

// 1/Gamma(z_i^{+-1} z_j^{+-1}) in entire form.
cplx cross_factor(cplx zi, cplx zj, const BasePair& base, const TruncationPolicy& policy = {});

// Residue picked up by the contour when t_j leaves the unit disk:
// prod_{r != j} Gamma(t_r t_j^{+-1}) / Gamma(t_j^{-2}).
cplx crossing_term(std::span<const cplx> t, std::size_t j, const BasePair& base,
                   const TruncationPolicy& policy = {});

QuadResult i1m(const TypeIParams& params, const QuadSpec& spec = {}, const Contour& contour = {});

// I_1^(m) for parameters that have crossed the unit circle: unit-circle
// quadrature plus one crossing_term per parameter with |t_j| > 1. Needs
// |p t_j|, |q t_j| < 1 for those parameters and no |t_j| near 1.
QuadResult i1m_continued(const TypeIParams& params, const QuadSpec& spec = {});

QuadResult v_function(const VParams& params, const QuadSpec& spec = {},
                      const Contour& contour = {});

// V / prod_j Gamma(t_j z^{+-1})
QuadResult w_function(const VParams& params, cplx z, const QuadSpec& spec = {});

// V / prod_{k=1,2} Gamma(t_k t_3^{+-1})
QuadResult u_function(const VParams& params, const QuadSpec& spec = {});

QuadResult inm_direct(const TypeIParams& params, const QuadSpec& spec = QuadSpec::tensor());

struct InmDetResult {
  cplx value{};
  double err_est = 0;
  std::int64_t nodes_used = 0;
  bool converged = true;
  double rcond = 1;
};

// Determinant of univariate integrals. a_idx and b_idx pick the slots used as
// a_1..a_n and b_1..b_n; empty means t_1..t_n and t_{n+1}..t_{2n}.
InmDetResult inm_det(const TypeIParams& params, const QuadSpec& spec = {},
                     std::span<const int> a_idx = {}, std::span<const int> b_idx = {});

// Solution for |q| > 1: V(p^{1/2}/t; 1/q, p) / prod_{k=1,2} Gamma_{p,1/q}(p/(t_k t_3), t_3/t_k).
// prod t must equal (pq)^2 with the large q. flip_branch negates p^{1/2}.
QuadResult v_qgt1_solution(std::span<const cplx> t, cplx p, cplx q_big, const QuadSpec& spec = {},
                           bool flip_branch = false);

}  // namespace ehi
