#include "ehi/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "ehi/integrals.hpp"

namespace ehi::cli {

namespace fs = std::filesystem;
using nlohmann::json;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::sampler_infeasible:
      return infeasible;
    case ErrorKind::non_convergent:
      return failure;
    default:
      return invalid;
  }
}

namespace {

cplx complex_of(const json& j, const char* what) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw Error(ErrorKind::invalid_argument, std::string(what) + " must be [re, im] or a number");
}

struct EvalInput {
  json j;

  bool has(const char* key) const { return j.contains(key); }
  cplx c(const char* key) const {
    if (!has(key)) throw Error(ErrorKind::invalid_argument, std::string("missing \"") + key + "\"");
    return complex_of(j.at(key), key);
  }
  std::vector<cplx> t() const {
    if (!has("t") || !j.at("t").is_array())
      throw Error(ErrorKind::invalid_argument, "missing parameter list \"t\"");
    std::vector<cplx> out;
    for (const auto& x : j.at("t")) out.push_back(complex_of(x, "t entry"));
    return out;
  }
  int integer(const char* key, int fallback) const {
    if (!has(key)) return fallback;
    if (!j.at(key).is_number_integer()) throw Error(ErrorKind::invalid_argument, std::string(key) + " must be an integer");
    return j.at(key).get<int>();
  }
  Normalize normalize() const {
    if (!has("normalize_last")) return Normalize::last;
    if (!j.at("normalize_last").is_boolean())
      throw Error(ErrorKind::invalid_argument, "normalize_last must be true or false");
    return j.at("normalize_last").get<bool>() ? Normalize::last : Normalize::none;
  }
  BasePair base() const { return {c("p"), c("q")}; }
};

std::string complex_json(cplx z) { return "[" + format_real(z.real()) + "," + format_real(z.imag()) + "]"; }

void print_value(std::ostream& out, const std::string& object, const QuadResult& r) {
  out << "{\"object\":" << json(object).dump() << ",\"value\":" << complex_json(r.value)
      << ",\"err_est\":" << format_real(r.err_est) << ",\"nodes_used\":" << r.nodes_used
      << ",\"converged\":" << (r.converged ? "true" : "false") << "}\n";
}

QuadSpec with_overrides(QuadSpec spec, std::optional<int> nodes, std::optional<double> rtol) {
  if (nodes) {
    spec.n_max = *nodes;
    spec.n0 = std::min(spec.n0, *nodes);
  }
  if (rtol) spec.rel_tol = *rtol;
  spec.validate();
  return spec;
}

// m from the parameter count 2n + 2m + 4, cross-checked against "m" if given.
int infer_m(const EvalInput& in, int n, std::size_t len) {
  const int twice = static_cast<int>(len) - 2 * n - 4;
  if (twice < 0 || twice % 2 != 0)
    throw Error(ErrorKind::invalid_argument, "parameter count must be 2n + 2m + 4");
  const int m = twice / 2;
  if (in.integer("m", m) != m)
    throw Error(ErrorKind::invalid_argument, "\"m\" disagrees with the parameter count");
  return m;
}

QuadResult evaluate(const std::string& object, const EvalInput& in, const QuadSpec& uni,
                    const QuadSpec& tensor) {
  if (object == "theta") return {theta(in.c("z"), in.c("p")), 0, 0, true};
  if (object == "gamma") {
    const auto b = in.base();
    if (in.has("z")) return {elliptic_gamma(in.c("z"), b), 0, 0, true};
    const auto t = in.t();
    return {gamma_product<double>(t, b), 0, 0, true};
  }
  if (object == "v") return v_function(VParams(in.t(), in.base(), in.normalize()), uni);
  if (object == "u_qgt1") return v_qgt1_solution(in.t(), in.c("p"), in.c("q"), uni);
  if (object == "i1m" || object == "inm_direct" || object == "inm_det") {
    const auto t = in.t();
    const int n = object == "i1m" ? 1 : in.integer("n", 2);
    if (object == "i1m" && in.integer("n", 1) != 1) throw Error(ErrorKind::invalid_argument, "i1m needs n = 1");
    const TypeIParams params(n, infer_m(in, n, t.size()), t, in.base(), in.normalize());
    if (object == "i1m") return i1m(params, uni);
    if (object == "inm_direct") return inm_direct(params, tensor);
    const auto r = inm_det(params, uni);
    return {r.value, r.err_est, r.nodes_used, r.converged};
  }
  throw Error(ErrorKind::invalid_argument, "unknown object " + object +
                                               " (theta, gamma, v, i1m, inm_direct, inm_det, u_qgt1)");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::invalid_argument, "cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

NM parse_nm(const std::string& s) {
  int n = 0, m = 0;
  char comma = 0, extra = 0;
  std::istringstream is(s);
  if (!(is >> n >> comma >> m) || comma != ',' || (is >> extra))
    throw Error(ErrorKind::invalid_argument, "--nm expects N,M");
  return {n, m};
}

int cmd_eval(const std::string& object, const std::string& params_file, const std::string& inline_json,
             std::optional<int> nodes, std::optional<double> rtol, std::ostream& out) {
  if (params_file.empty() == inline_json.empty())
    throw Error(ErrorKind::invalid_argument, "give exactly one of --params and --inline");
  EvalInput in;
  try {
    in.j = json::parse(params_file.empty() ? inline_json : read_file(params_file));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::invalid_argument, std::string("bad parameter JSON: ") + e.what());
  }
  if (!in.j.is_object()) throw Error(ErrorKind::invalid_argument, "parameters must be a JSON object");
  const auto uni = with_overrides(QuadSpec::univariate(), nodes, rtol);
  const auto tensor = with_overrides(QuadSpec::tensor(), nodes, rtol);
  const auto r = evaluate(object, in, uni, tensor);
  print_value(out, object, r);
  return r.converged ? ok : failure;
}

int cmd_verify(const std::string& target, int trials, std::uint64_t seed, std::optional<double> tol,
               const std::string& nm_text, std::string out_path, std::optional<int> nodes,
               std::optional<double> rtol, std::ostream& out, std::ostream& err) {
  if (trials < 1) throw Error(ErrorKind::invalid_argument, "--trials must be >= 1");
  std::vector<const IdentityInfo*> ids;
  if (target == "all") {
    for (const auto& id : registry()) ids.push_back(&id);
  } else if (const auto* id = find_identity(target)) {
    ids.push_back(id);
  } else {
    throw Error(ErrorKind::invalid_argument, "unknown identity " + target);
  }
  std::optional<NM> nm;
  if (!nm_text.empty()) nm = parse_nm(nm_text);
  if (nm && target != "all" && !ids.front()->supports(*nm))
    throw Error(ErrorKind::invalid_argument, target + " does not support --nm " + nm_text);

  CheckOptions opt;
  opt.quad = with_overrides(opt.quad, nodes, rtol);
  opt.tensor = with_overrides(opt.tensor, nodes, rtol);
  if (tol) {
    if (!(*tol > 0)) throw Error(ErrorKind::invalid_argument, "--tol must be positive");
    opt.tol = *tol;
  }

  if (out_path.empty()) {
    if (const char* dir = std::getenv("EHI_REPORT_DIR"); dir && *dir) {
      fs::create_directories(dir);
      out_path = (fs::path(dir) / (target + "-seed" + std::to_string(seed) + ".ndjson")).string();
    }
  }
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::trunc);
    if (!file) throw Error(ErrorKind::invalid_argument, "cannot write " + out_path);
  }
  std::ostream& sink = out_path.empty() ? out : file;

  VerifyConfig cfg;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.nm = nm;
  cfg.opt = opt;
  const int code = verify(ids, cfg, sink, err);
  sink.flush();
  return code;
}

std::string fixed(double x, int prec, const char* fmt = "%.*e") {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, prec, x);
  return buf;
}

int cmd_bench(const std::string& nm_text, std::uint64_t seed, std::optional<int> nodes,
              std::optional<double> rtol, std::ostream& out) {
  if (nm_text.empty()) throw Error(ErrorKind::invalid_argument, "bench needs --nm 2,M");
  const auto nm = parse_nm(nm_text);
  const auto r = run_bench(nm, seed, with_overrides(QuadSpec::univariate(), nodes, rtol),
                           with_overrides(QuadSpec::tensor(), nodes, rtol));
  out << "path        value                                          evaluations   seconds\n";
  for (const auto* p : {&r.direct, &r.det}) {
    std::string name = p->name;
    name.resize(12, ' ');
    out << name << fixed(p->value.real(), 15) << " " << fixed(p->value.imag(), 15) << "   "
        << p->evaluations << "   " << fixed(p->seconds, 3, "%.*f") << "\n";
  }
  out << "relative difference " << fixed(r.rel_diff, 3) << ", evaluation ratio "
      << fixed(double(r.direct.evaluations) / double(std::max<std::int64_t>(r.det.evaluations, 1)), 1, "%.*f")
      << "\n";
  return r.direct.converged && r.det.converged ? ok : failure;
}

int cmd_report(const std::string& dir, std::ostream& out) {
  const auto rows = summarize_dir(dir);
  out << "identity                      trials  pass_rate  max_residual  median_nodes\n";
  for (const auto& row : rows) {
    std::string name = row.name;
    name.resize(std::max<std::size_t>(name.size() + 1, 30), ' ');
    std::string trials = std::to_string(row.trials);
    trials.resize(8, ' ');
    out << name << trials << fixed(double(row.passed) / row.trials, 3, "%.*f") << "      "
        << fixed(row.max_residual, 2) << "      " << fixed(row.median_nodes, 0, "%.*f") << "\n";
  }
  return ok;
}

}  // namespace

int verify(std::span<const IdentityInfo* const> ids, const VerifyConfig& cfg, std::ostream& out,
           std::ostream& err) {
  int code = ok, lines = 0, failed = 0;
  for (const auto* id : ids) {
    const NM use = cfg.nm ? *cfg.nm : id->nm.front();
    if (!id->supports(use)) continue;
    for (int k = 0; k < cfg.trials; ++k) {
      IdentityReport r;
      try {
        r = run_identity(*id, cfg.seed, k, use, cfg.opt);
      } catch (const Error& e) {
        err << id->name << " trial " << k << ": " << e.what() << "\n";
        if (e.kind() == ErrorKind::sampler_infeasible) {
          code = infeasible;
          continue;
        }
        Draw d;
        d.seed = cfg.seed + static_cast<std::uint64_t>(k);
        d.n = use.first;
        d.m = use.second;
        r = make_report(id->name, d, std::nan(""), 1, cfg.opt.tol, 0);
      }
      out << to_line(r) << "\n";
      ++lines;
      if (!r.pass) {
        ++failed;
        if (code == ok) code = failure;
      }
    }
  }
  err << "verify: " << lines << " reports, " << failed << " failed\n";
  return code;
}

BenchResult run_bench(NM nm, std::uint64_t seed, const QuadSpec& univariate, const QuadSpec& tensor) {
  if (nm.first != 2 || (nm.second != 0 && nm.second != 1))
    throw Error(ErrorKind::invalid_argument, "bench compares the two routes for n = 2, m in {0, 1}");
  const auto* id = find_identity("heine");
  BenchResult out;
  out.draw = draw_for(*id, seed, 0, nm);
  const TypeIParams params(nm.first, nm.second, out.draw.t, out.draw.base, Normalize::none);
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  const auto direct = inm_direct(params, tensor);
  auto t1 = clock::now();
  const auto det = inm_det(params, univariate);
  auto t2 = clock::now();
  out.direct = {"tensor", direct.value, direct.nodes_used,
                std::chrono::duration<double>(t1 - t0).count(), direct.converged};
  out.det = {"determinant", det.value, det.nodes_used, std::chrono::duration<double>(t2 - t1).count(),
             det.converged};
  out.rel_diff = std::abs(direct.value - det.value) / std::max(std::abs(direct.value), std::abs(det.value));
  return out;
}

std::vector<SummaryRow> summarize_dir(const std::string& dir) {
  if (!fs::is_directory(dir)) throw Error(ErrorKind::invalid_argument, dir + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file()) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::map<std::string, std::pair<SummaryRow, std::vector<double>>> acc;
  for (const auto& f : files) {
    std::ifstream in(f);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      IdentityReport r;
      try {
        r = parse_line(line);
      } catch (const std::exception& e) {
        throw Error(ErrorKind::invalid_argument,
                    f.filename().string() + ":" + std::to_string(lineno) + ": not a report line");
      }
      auto& [row, nodes] = acc[r.name];
      row.name = r.name;
      ++row.trials;
      if (r.pass) ++row.passed;
      if (!(r.residual <= row.max_residual)) row.max_residual = r.residual;
      nodes.push_back(double(r.nodes_used));
    }
  }
  std::vector<SummaryRow> rows;
  for (auto& [name, entry] : acc) {
    auto& [row, nodes] = entry;
    std::sort(nodes.begin(), nodes.end());
    const std::size_t k = nodes.size();
    row.median_nodes = k % 2 ? nodes[k / 2] : 0.5 * (nodes[k / 2 - 1] + nodes[k / 2]);
    rows.push_back(row);
  }
  return rows;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elliptic hypergeometric integrals: evaluation and identity checks", "ehi"};
  app.require_subcommand(1);

  std::optional<int> nodes;
  std::optional<double> rtol;
  auto quad_flags = [&](CLI::App* sub) {
    sub->add_option("--nodes", nodes, "maximum quadrature nodes per axis (power of two)");
    sub->add_option("--rtol", rtol, "relative tolerance of node doubling");
  };

  std::string object, params_file, inline_json;
  auto* eval = app.add_subcommand("eval", "evaluate one object");
  eval->add_option("object", object, "theta, gamma, v, i1m, inm_direct, inm_det or u_qgt1")->required();
  eval->add_option("--params", params_file, "JSON parameter file");
  eval->add_option("--inline", inline_json, "JSON parameters on the command line");
  quad_flags(eval);

  std::string target, nm_text, out_path;
  int trials = 1;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  auto* verify = app.add_subcommand("verify", "run seeded identity checks");
  verify->add_option("identity", target, "identity name or all")->required();
  verify->add_option("--trials", trials, "draws per identity");
  verify->add_option("--seed", seed, "base seed");
  verify->add_option("--tol", tol, "tolerance override");
  verify->add_option("--nm", nm_text, "N,M");
  verify->add_option("--out", out_path, "report file (default: $EHI_REPORT_DIR or stdout)");
  quad_flags(verify);

  auto* bench = app.add_subcommand("bench", "tensor quadrature against the determinant route");
  bench->add_option("--nm", nm_text, "2,M")->required();
  bench->add_option("--seed", seed, "draw seed");
  quad_flags(bench);

  std::string dir;
  auto* report = app.add_subcommand("report", "summarize a directory of reports");
  report->add_option("dir", dir, "report directory")->required();

  auto* list = app.add_subcommand("list", "list registered identities");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return invalid;
  }

  try {
    if (eval->parsed()) return cmd_eval(object, params_file, inline_json, nodes, rtol, out);
    if (verify->parsed())
      return cmd_verify(target, trials, seed, tol, nm_text, out_path, nodes, rtol, out, err);
    if (bench->parsed()) return cmd_bench(nm_text, seed, nodes, rtol, out);
    if (report->parsed()) return cmd_report(dir, out);
    if (list->parsed()) {
      for (const auto& id : registry()) {
        out << id.name << "  (n, m) =";
        for (const auto& [n, m] : id.nm) out << " " << n << "," << m;
        out << "  " << id.summary << "\n";
      }
      return ok;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return invalid;
  }
  return invalid;
}

}  // namespace ehi::cli
