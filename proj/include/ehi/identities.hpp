#pragma once

// Residual checks, one per identity. Each registered identity pairs a draw
// routine (seeded, with its own modulus windows and rejection rules) with a
// check that evaluates both sides and reports the relative residual.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ehi/integrals.hpp"
#include "ehi/report.hpp"
#include "ehi/sampler.hpp"

namespace ehi {

struct CheckOptions {
  QuadSpec quad = QuadSpec::univariate();
  QuadSpec tensor = QuadSpec::tensor();
  double tol = 0;  // 0 selects the identity's default (which may depend on n, m)
};

using NM = std::pair<int, int>;
using DrawFn = std::function<Draw(Sampler&, NM)>;
using CheckFn = std::function<IdentityReport(const Draw&, const CheckOptions&)>;

struct IdentityInfo {
  std::string name;
  std::string summary;
  std::vector<NM> nm;  // supported (n, m); the first entry is the default
  DrawFn draw;
  CheckFn check;

  bool supports(NM v) const;
};

const std::vector<IdentityInfo>& registry();
const IdentityInfo* find_identity(std::string_view name);

// Draw seed is seed + trial; the identity name selects the random stream.
Draw draw_for(const IdentityInfo& id, std::uint64_t seed, int trial, NM nm);
IdentityReport run_identity(const IdentityInfo& id, std::uint64_t seed, int trial, NM nm,
                            const CheckOptions& opt = {});

// Potential of the second-order difference equation. q enters only through
// theta_p arguments, so |q| > 1 is allowed.
cplx potential_a(std::span<const cplx> t, cplx q, cplx p);

// Coefficients alpha, beta, gamma, delta of the three-term W relations.
struct WCoefficients {
  cplx alpha, beta, gamma, delta;
};
WCoefficients w_coefficients(std::span<const cplx> t, cplx z, cplx p);

// g^(m)(z) built from t_1..t_{m+2} and v_1..v_{m+4}.
cplx g_function(std::span<const cplx> t, std::span<const cplx> v, cplx z, const BasePair& base);

// Recurrence coefficients in the form used by the parameter-inversion check.
std::vector<cplx> rec1_coefficients(std::span<const cplx> t, int n, cplx z, cplx p);
std::vector<cplx> rec2_coefficients(std::span<const cplx> t, int n, int m, cplx q, cplx z, cplx p);

// Check routines, callable with hand-made draws.
IdentityReport check_theta_quasi_periodicity(const Draw& d, const CheckOptions& opt);
IdentityReport check_theta_inversion(const Draw& d, const CheckOptions& opt);
IdentityReport check_gamma_q_shift(const Draw& d, const CheckOptions& opt);
IdentityReport check_gamma_p_shift(const Draw& d, const CheckOptions& opt);
IdentityReport check_gamma_reflection(const Draw& d, const CheckOptions& opt);
IdentityReport check_gamma_symmetry(const Draw& d, const CheckOptions& opt);
IdentityReport check_theta_addition(const Draw& d, const CheckOptions& opt);
IdentityReport check_rec1_kernel(const Draw& d, const CheckOptions& opt);

IdentityReport check_elliptic_beta(const Draw& d, const CheckOptions& opt);
IdentityReport check_v_reduction(const Draw& d, const CheckOptions& opt);
IdentityReport check_contiguity1(const Draw& d, const CheckOptions& opt);
IdentityReport check_contiguity3(const Draw& d, const CheckOptions& opt);
IdentityReport check_eheq(const Draw& d, const CheckOptions& opt);
IdentityReport check_eheq_second_solution(const Draw& d, const CheckOptions& opt);
IdentityReport check_eheq_qgt1(const Draw& d, const CheckOptions& opt);
IdentityReport check_potential_ellipticity(const Draw& d, const CheckOptions& opt);
IdentityReport check_potential_q_inversion(const Draw& d, const CheckOptions& opt);
IdentityReport check_casoratian(const Draw& d, const CheckOptions& opt);
IdentityReport check_three_routes(const Draw& d, const CheckOptions& opt);
IdentityReport check_residue_crossing(const Draw& d, const CheckOptions& opt);

IdentityReport check_w_c1(const Draw& d, const CheckOptions& opt);
IdentityReport check_w_c2(const Draw& d, const CheckOptions& opt);
IdentityReport check_w_c3(const Draw& d, const CheckOptions& opt);
IdentityReport check_w_coefficient_ellipticity(const Draw& d, const CheckOptions& opt);
IdentityReport check_matrix_a_eq(const Draw& d, const CheckOptions& opt);
IdentityReport check_matrix_b_eq(const Draw& d, const CheckOptions& opt);
IdentityReport check_matrix_a_ellipticity(const Draw& d, const CheckOptions& opt);
IdentityReport check_matrix_transpose(const Draw& d, const CheckOptions& opt);
IdentityReport check_im_matrix_system(const Draw& d, const CheckOptions& opt);
IdentityReport check_im_matrix_ellipticity(const Draw& d, const CheckOptions& opt);
IdentityReport check_im_matrix_transpose(const Draw& d, const CheckOptions& opt);

IdentityReport check_recurrence1(const Draw& d, const CheckOptions& opt);
IdentityReport check_recurrence_univariate(const Draw& d, const CheckOptions& opt);
IdentityReport check_recurrence2(const Draw& d, const CheckOptions& opt);
IdentityReport check_g_symmetry(const Draw& d, const CheckOptions& opt);
IdentityReport check_g_quasi_periodicity(const Draw& d, const CheckOptions& opt);
IdentityReport check_g_partial_fractions(const Draw& d, const CheckOptions& opt);
IdentityReport check_g_vanishing(const Draw& d, const CheckOptions& opt);
IdentityReport check_zero_mode(const Draw& d, const CheckOptions& opt);
IdentityReport check_zero_mode_det(const Draw& d, const CheckOptions& opt);
IdentityReport check_in0_evaluation(const Draw& d, const CheckOptions& opt);
IdentityReport check_transformation(const Draw& d, const CheckOptions& opt);
IdentityReport check_big_determinant(const Draw& d, const CheckOptions& opt);
IdentityReport check_q_inversion_invariance(const Draw& d, const CheckOptions& opt);

IdentityReport check_cauchy_det(const Draw& d, const CheckOptions& opt);
IdentityReport check_exterior_power(const Draw& d, const CheckOptions& opt);
IdentityReport check_minor_relation(const Draw& d, const CheckOptions& opt);
IdentityReport check_heine(const Draw& d, const CheckOptions& opt);
IdentityReport check_det_assignment(const Draw& d, const CheckOptions& opt);

}  // namespace ehi
