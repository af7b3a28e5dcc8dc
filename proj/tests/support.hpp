#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

namespace test {

using cplx = std::complex<double>;

class Draws {
 public:
  explicit Draws(unsigned seed) : gen_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  cplx polar(double lo, double hi) {
    return std::polar(uniform(lo, hi), uniform(0, 2 * std::numbers::pi));
  }

 private:
  std::mt19937_64 gen_;
};

inline double rel(cplx a, cplx b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s > 0 ? std::abs(a - b) / s : 0.0;
}

}  // namespace test

#include <vector>

namespace test {

// n parameters with free moduli in [lo, hi] and the last one solved from the
// product; redraws until the solved one also lies in [lo, hi].
inline std::vector<cplx> balanced(Draws& d, int n, cplx target, double lo = 0.3, double hi = 0.85) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<cplx> t(n);
    cplx prod = 1;
    for (int i = 0; i + 1 < n; ++i) {
      t[i] = d.polar(lo, hi);
      prod *= t[i];
    }
    t[n - 1] = target / prod;
    const double a = std::abs(t[n - 1]);
    if (a >= lo && a <= hi) return t;
  }
  throw std::runtime_error("no balanced draw");
}

}  // namespace test
