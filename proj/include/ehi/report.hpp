#pragma once

// One line of identity-check output and the draw it was computed from.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ehi/specfun.hpp"

namespace ehi {

struct Draw {
  std::uint64_t seed = 0;
  BasePair base{cplx(0.2), cplx(0.3)};
  int n = 0, m = 0;
  std::vector<cplx> t;      // main parameter vector
  std::vector<cplx> aux;    // auxiliary points (z, x, v, a large q, matrix entries)
  std::vector<double> a;    // exponent vector of the parameter inversion
};

struct IdentityReport {
  std::string name;
  double residual = 0;
  double scale = 1;
  double tol = 0;
  bool pass = false;
  std::string params_echo;  // JSON object
  std::int64_t nodes_used = 0;
  std::uint64_t seed = 0;
};

// Complex numbers as [re, im]; all reals in %.17e, non-finite values as null.
std::string draw_to_json(const Draw& d);

IdentityReport make_report(std::string name, const Draw& d, double residual, double scale,
                           double tol, std::int64_t nodes_used);

std::string to_line(const IdentityReport& r);
IdentityReport parse_line(const std::string& line);

std::string format_real(double x);

}  // namespace ehi
