// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ehi/cli.hpp"
#include "ehi/identities.hpp"

using namespace ehi;

namespace {

using clock_type = std::chrono::steady_clock;

struct Tally {
  int draws = 0, failed = 0;
  double worst = 0;
  std::int64_t max_nodes = 0;
  std::vector<std::string> notes;

  void add(const Tally& o) {
    draws += o.draws;
    failed += o.failed;
    worst = std::max(worst, o.worst);
    max_nodes = std::max(max_nodes, o.max_nodes);
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
  }
};

// `draws` seeded trials of one identity at one size, tolerance pinned.
Tally sweep(const char* name, NM nm, int draws, double tol) {
  Tally t;
  const auto* id = find_identity(name);
  if (!id) {
    t.failed = t.draws = 1;
    t.notes.push_back(std::string("missing identity ") + name);
    return t;
  }
  CheckOptions opt;
  opt.tol = tol;
  for (int k = 0; k < draws; ++k) {
    ++t.draws;
    try {
      const auto r = run_identity(*id, 0, k, nm, opt);
      if (!(r.residual <= t.worst)) t.worst = r.residual;
      t.max_nodes = std::max(t.max_nodes, r.nodes_used);
      if (!r.pass) {
        ++t.failed;
        t.notes.push_back(to_line(r));
      }
    } catch (const std::exception& e) {
      ++t.failed;
      t.notes.push_back(std::string(name) + " trial " + std::to_string(k) + ": " + e.what());
    }
  }
  return t;
}

struct Criterion {
  int number;
  const char* title;
  std::function<bool(std::string&)> run;  // fills a one-line detail
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

std::string summary(const Tally& t) {
  return std::to_string(t.draws) + " draws, " + std::to_string(t.failed) + " failed, worst " + sci(t.worst);
}

struct Item {
  const char* name;
  NM nm;
  int draws;
  double tol;
};

Tally sweep_all(std::initializer_list<Item> items) {
  Tally t;
  for (const auto& it : items) t.add(sweep(it.name, it.nm, it.draws, it.tol));
  return t;
}

bool finish(const Tally& t, std::string& detail, bool extra = true) {
  detail = summary(t) + detail;
  for (std::size_t i = 0; i < std::min<std::size_t>(t.notes.size(), 3); ++i) detail += "\n    " + t.notes[i];
  return t.failed == 0 && extra;
}

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

bool timed(const Tally& t, double limit, clock_type::time_point t0, std::string& detail) {
  const double s = seconds_since(t0);
  detail = ", " + sci(s) + " s (limit " + std::to_string(int(limit)) + " s)";
  return finish(t, detail, s <= limit);
}

const std::vector<Criterion> criteria = {
    {1, "special-function functional equations",
     [](std::string& d) {
       const auto t0 = clock_type::now();
       const auto t = sweep_all({{"theta-quasi-periodicity", {0, 0}, 200, 1e-12},
                                 {"theta-inversion", {0, 0}, 200, 1e-12},
                                 {"gamma-q-shift", {0, 0}, 200, 1e-12},
                                 {"gamma-p-shift", {0, 0}, 200, 1e-12},
                                 {"gamma-reflection", {0, 0}, 200, 1e-12},
                                 {"gamma-symmetry", {0, 0}, 200, 1e-12}});
       return timed(t, 5, t0, d);
     }},
    {2, "theta addition and recurrence kernel",
     [](std::string& d) {
       const auto t0 = clock_type::now();
       const auto t = sweep_all({{"theta-addition", {0, 0}, 100, 1e-11},
                                 {"rec1-kernel", {1, 0}, 100, 1e-11},
                                 {"rec1-kernel", {2, 0}, 100, 1e-11},
                                 {"rec1-kernel", {3, 0}, 100, 1e-11}});
       return timed(t, 5, t0, d);
     }},
    {3, "elliptic beta integral and V reduction",
     [](std::string& d) {
       const auto t0 = clock_type::now();
       const auto t = sweep_all({{"elliptic-beta", {1, 0}, 20, 1e-8}, {"v-reduction", {0, 0}, 20, 1e-8}});
       const bool ok = timed(t, 30, t0, d);
       d += ", max nodes " + std::to_string(t.max_nodes) + " (limit 1024)";
       return ok && t.max_nodes <= 1024;
     }},
    {4, "contiguity relations and the difference equation",
     [](std::string& d) {
       return finish(sweep_all({{"contiguity1", {0, 0}, 20, 1e-7},
                                {"contiguity3", {0, 0}, 20, 1e-7},
                                {"eheq", {0, 0}, 20, 1e-7},
                                {"eheq-second-solution", {0, 0}, 20, 1e-7},
                                {"eheq-qgt1", {0, 0}, 10, 1e-6}}),
                     d);
     }},
    {5, "Casoratian and three routes to the n = 2 product",
     [](std::string& d) {
       return finish(sweep_all({{"casoratian", {0, 0}, 20, 1e-6}, {"three-routes", {2, 0}, 5, 1e-6}}), d);
     }},
    {6, "matrix q-difference systems",
     [](std::string& d) {
       return finish(sweep_all({{"matrix-a-eq", {0, 0}, 10, 1e-7},
                                {"matrix-b-eq", {0, 0}, 10, 1e-7},
                                {"im-matrix-system", {1, 1}, 10, 1e-6},
                                {"im-matrix-ellipticity", {1, 1}, 10, 1e-11}}),
                     d);
     }},
    {7, "recurrences",
     [](std::string& d) {
       return finish(sweep_all({{"recurrence1", {1, 0}, 10, 1e-6},
                                {"recurrence1", {2, 0}, 10, 1e-6},
                                {"recurrence-univariate", {1, 0}, 10, 1e-6},
                                {"recurrence-univariate", {1, 1}, 10, 1e-6},
                                {"recurrence2", {2, 0}, 10, 1e-6},
                                {"recurrence2", {2, 1}, 10, 1e-6}}),
                     d);
     }},
    {8, "g function suite",
     [](std::string& d) {
       Tally t;
       for (int m : {1, 2})
         t.add(sweep_all({{"g-symmetry", {1, m}, 20, 1e-11},
                          {"g-quasi-periodicity", {1, m}, 20, 1e-11},
                          {"g-partial-fractions", {1, m}, 20, 1e-10},
                          {"g-vanishing", {1, m}, 10, 1e-8}}));
       return finish(t, d);
     }},
    {9, "zero mode",
     [](std::string& d) {
       Tally t;
       for (int m : {0, 1})
         t.add(sweep_all({{"zero-mode", {1, m}, 10, 1e-7}, {"zero-mode-det", {1, m}, 10, 1e-6}}));
       return finish(t, d);
     }},
    {10, "transformation",
     [](std::string& d) {
       return finish(sweep_all({{"trafo", {1, 1}, 10, 1e-7},
                                {"trafo", {2, 1}, 5, 1e-6},
                                {"trafo", {1, 2}, 5, 1e-6},
                                {"trafo", {1, 0}, 5, 1e-6},
                                {"trafo", {2, 0}, 5, 1e-6}}),
                     d);
     }},
    {11, "big determinant and exterior powers",
     [](std::string& d) {
       return finish(sweep_all({{"big-determinant", {1, 1}, 5, 1e-6},
                                {"exterior-power", {2, 1}, 20, 1e-12},
                                {"exterior-power", {1, 2}, 20, 1e-12},
                                {"exterior-power", {3, 1}, 20, 1e-12},
                                {"exterior-power", {2, 2}, 20, 1e-12},
                                {"exterior-power", {1, 3}, 20, 1e-12}}),
                     d);
     }},
    {12, "Cauchy determinant, determinant route and bench",
     [](std::string& d) {
       const auto t = sweep_all({{"cauchy-det", {1, 0}, 20, 1e-10},
                                 {"cauchy-det", {2, 0}, 20, 1e-10},
                                 {"cauchy-det", {3, 0}, 20, 1e-10},
                                 {"heine", {2, 0}, 5, 1e-6},
                                 {"heine", {2, 1}, 5, 1e-6}});
       bool bench_ok = true;
       std::string extra;
       for (int m : {0, 1}) {
         const auto b = cli::run_bench({2, m}, 0);
         const double ratio = double(b.direct.evaluations) / double(std::max<std::int64_t>(b.det.evaluations, 1));
         bench_ok = bench_ok && ratio >= 5 && b.rel_diff <= 1e-6 && b.direct.converged && b.det.converged;
         extra += "; bench (2," + std::to_string(m) + ") ratio " + sci(ratio) + " diff " + sci(b.rel_diff);
       }
       d = extra;
       return finish(t, d, bench_ok);
     }},
    {13, "verify all is deterministic",
     [](std::string& d) {
       auto once = [] {
         std::ostringstream out, err;
         const int code = cli::run_cli({"ehi", "verify", "all", "--seed", "0"}, out, err);
         return std::make_pair(code, out.str());
       };
       const auto a = once(), b = once();
       const auto lines = std::count(a.second.begin(), a.second.end(), '\n');
       d = std::to_string(lines) + " report lines, exit codes " + std::to_string(a.first) + "/" +
           std::to_string(b.first) + (a.second == b.second ? ", identical" : ", differ");
       return lines > 0 && a.second == b.second;
     }},
};

}  // namespace

int main() {
  ::unsetenv("EHI_REPORT_DIR");  // keep verify output on the in-memory stream
  const auto t0 = clock_type::now();
  int failed = 0;
  for (const auto& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("error: ") + e.what();
    }
    failed += !ok;
    std::printf("criterion %2d %s  %s: %s\n", c.number, ok ? "PASS" : "FAIL", c.title, detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed in %.1f s\n", int(criteria.size()) - failed, criteria.size(),
              seconds_since(t0));
  return failed ? 1 : 0;
}
