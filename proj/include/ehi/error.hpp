#pragma once

#include <stdexcept>
#include <string>

namespace ehi {

enum class ErrorKind {
  invalid_argument,
  non_convergent,
  domain,
  pole_proximity,
  tie_break,
  cap_exceeded,
  contour_invalid,
  balancing_violated,
  kernel_violated,
  sampler_infeasible,
};

const char* to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries one of the kinds above so that
// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::non_convergent: return "non-convergent";
    case ErrorKind::domain: return "domain error";
    case ErrorKind::pole_proximity: return "pole proximity";
    case ErrorKind::tie_break: return "tie break";
    case ErrorKind::cap_exceeded: return "cap exceeded";
    case ErrorKind::contour_invalid: return "contour invalid";
    case ErrorKind::balancing_violated: return "balancing violated";
    case ErrorKind::kernel_violated: return "kernel violated";
    case ErrorKind::sampler_infeasible: return "sampler infeasible";
  }
  return "error";
}

}  // namespace ehi
