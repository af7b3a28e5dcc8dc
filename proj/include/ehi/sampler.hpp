#pragma once

// Seeded parameter draws for the identity checks: bases, per-parameter
// modulus windows with an exact product constraint, and rejection of draws
// that land near singular coefficients.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ehi/integrals.hpp"

namespace ehi {

class Rng {
 public:
  Rng(std::uint64_t seed, std::string_view stream);

  double uniform();  // [0, 1), 53 random bits
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  cplx polar(double lo, double hi);
  int integer(int lo, int hi);  // inclusive

 private:
  std::mt19937_64 gen_;
};

struct Window {
  double lo, hi;
};

inline constexpr int kMaxRejections = 1000;
inline constexpr double kShiftedModulusCap = 0.95;

class Sampler {
 public:
  Sampler(std::uint64_t seed, std::string_view stream) : rng_(seed, stream) {}

  Rng& rng() noexcept { return rng_; }

  // |p|, |q| in [lo, hi] with uniform phases, generic pair.
  BasePair base(double lo = 0.15, double hi = 0.4);

  // Moduli inside the windows, uniform phases, product exactly `target`.
  // Throws SamplerInfeasible if the windows cannot reach |target|.
  std::vector<cplx> balanced(std::span<const Window> windows, cplx target);

  // Calls attempt() until it returns without a rejection-type error.
  template <typename F>
  auto draw(F&& attempt) -> decltype(attempt()) {
    std::string last;
    for (int i = 0; i < kMaxRejections; ++i) {
      try {
        return attempt();
      } catch (const Error& e) {
        if (!rejectable(e.kind())) throw;
        last = e.what();
      }
    }
    throw Error(ErrorKind::sampler_infeasible,
                "no admissible draw after " + std::to_string(kMaxRejections) +
                    " attempts; last rejection: " + last);
  }

  static bool rejectable(ErrorKind kind);

 private:
  Rng rng_;
};

std::vector<Window> repeat(Window w, int count);
std::vector<Window> concat(std::initializer_list<std::vector<Window>> parts);

// Rejection helpers; each throws a rejectable error.
void reject_if(bool condition, ErrorKind kind, const std::string& why);
// Every shifted parameter set must keep all moduli below `cap`.
void require_shift_table(std::span<const cplx> t, const BasePair& base,
                         std::span<const std::vector<ShiftSpec>> table,
                         double cap = kShiftedModulusCap);
// x must stay away from the zeros p^k of theta_p.
void require_off_lattice(cplx x, cplx p, double delta = kTieDelta);

}  // namespace ehi
