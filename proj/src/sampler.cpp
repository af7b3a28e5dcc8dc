#include "ehi/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace ehi {

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::mt19937_64 seeded(std::uint64_t seed, std::string_view stream) {
  const std::uint64_t h = fnv1a(stream);
  std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(h),
                    std::uint32_t(h >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::string_view stream) : gen_(seeded(seed, stream)) {}

double Rng::uniform() { return double(gen_() >> 11) * 0x1.0p-53; }

cplx Rng::polar(double lo, double hi) {
  const double r = uniform(lo, hi);
  return std::polar(r, 2.0 * std::numbers::pi * uniform());
}

int Rng::integer(int lo, int hi) {
  return lo + static_cast<int>(uniform() * double(hi - lo + 1));
}

bool Sampler::rejectable(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::sampler_infeasible:
    case ErrorKind::tie_break:
    case ErrorKind::pole_proximity:
    case ErrorKind::contour_invalid:
    case ErrorKind::domain:
      return true;
    default:
      return false;
  }
}

BasePair Sampler::base(double lo, double hi) {
  for (int i = 0; i < kMaxRejections; ++i) {
    const BasePair b(rng_.polar(lo, hi), rng_.polar(lo, hi));
    if (b.generic()) return b;
  }
  throw Error(ErrorKind::sampler_infeasible, "no generic base pair");
}

std::vector<cplx> Sampler::balanced(std::span<const Window> windows, cplx target) {
  const std::size_t n = windows.size();
  if (n == 0) throw Error(ErrorKind::invalid_argument, "no windows");
  std::vector<double> a(n), span(n), u(n);
  double low = 0, total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(windows[i].lo > 0 && windows[i].hi > windows[i].lo))
      throw Error(ErrorKind::sampler_infeasible, "empty modulus window");
    a[i] = std::log(windows[i].lo);
    span[i] = std::log(windows[i].hi) - a[i];
    low += a[i];
    total += span[i];
  }
  // Log-moduli l_i = a_i + min(1, s u_i) span_i with s chosen so that the
  // sum hits log|target|.
  const double need = std::log(std::abs(target)) - low;
  if (need < 0 || need > total)
    throw Error(ErrorKind::sampler_infeasible,
                "modulus windows cannot reach |target| = " + std::to_string(std::abs(target)));
  for (auto& x : u) x = rng_.uniform(0.05, 1.0);
  auto filled = [&](double s) {
    double f = 0;
    for (std::size_t i = 0; i < n; ++i) f += std::min(1.0, s * u[i]) * span[i];
    return f;
  };
  double lo = 0, hi = 1.0 / 0.05;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (filled(mid) < need ? lo : hi) = mid;
  }
  std::vector<cplx> t(n);
  cplx prod = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double l = a[i] + std::min(1.0, hi * u[i]) * span[i];
    t[i] = std::polar(std::exp(l), 2.0 * std::numbers::pi * rng_.uniform());
    prod *= t[i];
  }
  t[n - 1] = target / prod;
  const double last = std::abs(t[n - 1]);
  const Window& w = windows[n - 1];
  if (last < w.lo * (1 - 1e-9) || last > w.hi * (1 + 1e-9))
    throw Error(ErrorKind::sampler_infeasible, "solved parameter left its window");
  return t;
}

std::vector<Window> repeat(Window w, int count) { return std::vector<Window>(count, w); }

std::vector<Window> concat(std::initializer_list<std::vector<Window>> parts) {
  std::vector<Window> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

void reject_if(bool condition, ErrorKind kind, const std::string& why) {
  if (condition) throw Error(kind, why);
}

void require_shift_table(std::span<const cplx> t, const BasePair& base,
                         std::span<const std::vector<ShiftSpec>> table, double cap) {
  for (const auto& row : table) {
    const auto s = shifted(t, row, base);
    for (const auto& x : s)
      reject_if(!(std::abs(x) < cap), ErrorKind::contour_invalid,
                "a shifted parameter set leaves the disk of radius " + std::to_string(cap));
  }
}

void require_off_lattice(cplx x, cplx p, double delta) {
  reject_if(x == cplx(0), ErrorKind::domain, "zero argument");
  const double lp = std::log(std::abs(p));
  const double k0 = std::round(std::log(std::abs(x)) / lp);
  for (double k = k0 - 1; k <= k0 + 1; ++k) {
    const cplx pk = std::pow(p, k);
    reject_if(std::abs(x / pk - 1.0) < delta, ErrorKind::tie_break,
              "theta argument close to a zero of theta");
  }
}

}  // namespace ehi
