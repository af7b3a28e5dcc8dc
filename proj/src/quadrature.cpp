#include "ehi/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "ehi/error.hpp"

namespace ehi {

namespace {

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

cplx pairwise_sum(const cplx* x, std::size_t n) {
  if (n <= 8) {
    cplx s = 0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

cplx node(const Contour& c, std::int64_t k, std::int64_t n) {
  const double th = 2.0 * std::numbers::pi * double(k) / double(n) + c.phase;
  return std::polar(c.radius, th);
}

void require_finite(cplx v) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw Error(ErrorKind::domain, "integrand is not finite on the contour");
}

// Refinements also stop once they only move the value by rounding noise of
// the samples, which matters when |I| is much smaller than the mean of |f|.
constexpr double kRoundoffUlps = 32;

bool close_enough(cplx now, cplx before, double mean_abs, const QuadSpec& spec, double* delta) {
  *delta = std::abs(now - before);
  return *delta <= spec.rel_tol * std::max(std::abs(now), spec.abs_floor) ||
         *delta <= kRoundoffUlps * std::numeric_limits<double>::epsilon() * mean_abs;
}

struct Sums {
  cplx value = 0;
  double modulus = 0;
};

Sums pairwise_sums(const std::vector<cplx>& v) {
  double m = 0;
  for (const auto& x : v) m += std::abs(x);
  return {pairwise_sum(v.data(), v.size()), m};
}

}  // namespace

void QuadSpec::validate() const {
  if (n0 < 16 || n_max < n0 || !is_pow2(n0) || !is_pow2(n_max) || !(rel_tol > 0) ||
      !(abs_floor >= 0))
    throw Error(ErrorKind::invalid_argument,
                "quadrature spec needs power-of-two 16 <= n0 <= n_max and rel_tol > 0");
}

QuadResult contour_integrate(const Integrand& f, const Contour& contour, const QuadSpec& spec) {
  spec.validate();
  if (!(contour.radius > 0)) throw Error(ErrorKind::invalid_argument, "contour radius must be > 0");

  std::int64_t n = spec.n0;
  std::vector<cplx> vals(static_cast<std::size_t>(n));
  for (std::int64_t k = 0; k < n; ++k) {
    vals[k] = f(node(contour, k, n));
    require_finite(vals[k]);
  }
  auto [sum, modulus] = pairwise_sums(vals);
  QuadResult out;
  out.value = sum / double(n);
  out.nodes_used = n;
  while (2 * n <= spec.n_max) {
    const std::int64_t n2 = 2 * n;
    for (std::int64_t k = 0; k < n; ++k) {
      vals[k] = f(node(contour, 2 * k + 1, n2));
      require_finite(vals[k]);
    }
    const auto added = pairwise_sums(vals);
    sum += added.value;
    modulus += added.modulus;
    const cplx next = sum / double(n2);
    const bool done = close_enough(next, out.value, modulus / double(n2), spec, &out.err_est);
    out.value = next;
    out.nodes_used = n2;
    n = n2;
    if (done) {
      out.converged = true;
      return out;
    }
    vals.resize(static_cast<std::size_t>(n));
  }
  return out;
}

namespace {

// Shared driver: eval(idx) gives the integrand at grid indices idx (level n);
// prepare(n) lets the caller cache per-axis data for a new level.
template <typename Eval, typename Prepare>
QuadResult tensor_driver(int dim, const QuadSpec& spec, Eval&& eval, Prepare&& prepare) {
  spec.validate();
  if (dim < 1 || dim > 3)
    throw Error(ErrorKind::cap_exceeded,
                "tensor quadrature supports 1 to 3 dimensions, got " + std::to_string(dim));

  auto level_sum = [&](std::int64_t n, bool skip_old) {
    prepare(n);
    std::int64_t total = 1;
    for (int d = 0; d < dim; ++d) total *= n;
    std::vector<cplx> vals;
    vals.reserve(static_cast<std::size_t>(total));
    std::int64_t idx[3] = {0, 0, 0};
    for (std::int64_t flat = 0; flat < total; ++flat) {
      std::int64_t rest = flat;
      bool all_even = true;
      for (int d = dim - 1; d >= 0; --d) {
        idx[d] = rest % n;
        rest /= n;
        all_even = all_even && idx[d] % 2 == 0;
      }
      if (skip_old && all_even) continue;
      const cplx v = eval(std::span<const std::int64_t>(idx, dim), n);
      require_finite(v);
      vals.push_back(v);
    }
    return pairwise_sums(vals);
  };
  auto volume = [dim](std::int64_t n) {
    double v = 1;
    for (int d = 0; d < dim; ++d) v *= double(n);
    return v;
  };

  std::int64_t n = spec.n0;
  auto [sum, modulus] = level_sum(n, false);
  QuadResult out;
  out.value = sum / volume(n);
  out.nodes_used = static_cast<std::int64_t>(volume(n));
  while (2 * n <= spec.n_max) {
    const std::int64_t n2 = 2 * n;
    const auto added = level_sum(n2, true);
    sum += added.value;
    modulus += added.modulus;
    const cplx next = sum / volume(n2);
    const bool done = close_enough(next, out.value, modulus / volume(n2), spec, &out.err_est);
    out.value = next;
    out.nodes_used = static_cast<std::int64_t>(volume(n2));
    n = n2;
    if (done) {
      out.converged = true;
      break;
    }
  }
  return out;
}

}  // namespace

QuadResult tensor_integrate(const TensorIntegrand& f, const Contour& contour, const QuadSpec& spec,
                            int n) {
  std::vector<cplx> z(3);
  return tensor_driver(
      n, spec,
      [&](std::span<const std::int64_t> idx, std::int64_t level) {
        for (std::size_t d = 0; d < idx.size(); ++d) z[d] = node(contour, idx[d], level);
        return f(std::span<const cplx>(z.data(), idx.size()));
      },
      [](std::int64_t) {});
}

QuadResult tensor_integrate(const Integrand& w, const TensorIntegrand& c, const Contour& contour,
                            const QuadSpec& spec, int n) {
  std::vector<cplx> nodes, weights;
  std::vector<cplx> z(3);
  return tensor_driver(
      n, spec,
      [&](std::span<const std::int64_t> idx, std::int64_t) {
        cplx prod = 1;
        for (std::size_t d = 0; d < idx.size(); ++d) {
          z[d] = nodes[idx[d]];
          prod *= weights[idx[d]];
        }
        return prod * c(std::span<const cplx>(z.data(), idx.size()));
      },
      [&](std::int64_t level) {
        // Reuse the previous level: its nodes are the even indices now.
        std::vector<cplx> nn(level), ww(level);
        for (std::int64_t k = 0; k < level; ++k) {
          if (k % 2 == 0 && !nodes.empty() && std::int64_t(nodes.size()) * 2 == level) {
            nn[k] = nodes[k / 2];
            ww[k] = weights[k / 2];
          } else {
            nn[k] = node(contour, k, level);
            ww[k] = w(nn[k]);
            require_finite(ww[k]);
          }
        }
        nodes.swap(nn);
        weights.swap(ww);
      });
}

double max_modulus(std::span<const cplx> t) {
  double m = 0;
  for (const auto& x : t) m = std::max(m, std::abs(x));
  return m;
}

bool circle_contour_valid(std::span<const cplx> t, double r, double margin) {
  if (t.empty()) throw Error(ErrorKind::invalid_argument, "contour check needs parameters");
  const double m = max_modulus(t);
  if (m == 0) return r > margin;
  return m < r - margin && r + margin < 1.0 / m;
}

}  // namespace ehi
