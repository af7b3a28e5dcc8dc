#pragma once

// Command-line front end: eval, verify, bench and report. The executable in
// tools/ is a thin wrapper around run_cli so tests can drive it in-process.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ehi/identities.hpp"

namespace ehi::cli {

enum Exit : int { ok = 0, invalid = 1, failure = 2, infeasible = 3 };

// args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int exit_code(ErrorKind kind);

struct VerifyConfig {
  int trials = 1;
  std::uint64_t seed = 0;
  std::optional<NM> nm;  // default: each identity's first (n, m)
  CheckOptions opt;
};

// One report line per trial on `out`, in registry and trial order. Returns the exit code:
// 3 if a draw was infeasible, else 2 if any check failed or raised, else 0.
int verify(std::span<const IdentityInfo* const> ids, const VerifyConfig& cfg, std::ostream& out,
           std::ostream& err);

struct BenchPath {
  std::string name;
  cplx value;
  std::int64_t evaluations = 0;  // integrand evaluations (tensor: grid points)
  double seconds = 0;
  bool converged = true;
};

struct BenchResult {
  Draw draw;
  BenchPath direct, det;
  double rel_diff = 0;
};

// Same draw through inm_direct and inm_det; n must be 2.
BenchResult run_bench(NM nm, std::uint64_t seed, const QuadSpec& univariate = QuadSpec::univariate(),
                      const QuadSpec& tensor = QuadSpec::tensor());

struct SummaryRow {
  std::string name;
  int trials = 0;
  int passed = 0;
  double max_residual = 0;
  double median_nodes = 0;
};

// Aggregates every report line in the regular files of `dir`, sorted by name.
std::vector<SummaryRow> summarize_dir(const std::string& dir);

}  // namespace ehi::cli
