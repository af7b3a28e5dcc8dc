#include "ehi/report.hpp"

#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <sstream>

namespace ehi {

std::string format_real(double x) {
  if (!std::isfinite(x)) return "null";  // JSON has no NaN or infinity
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17e", x);
  return buf;
}

namespace {

std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

std::string complex_json(cplx z) {
  return "[" + format_real(z.real()) + "," + format_real(z.imag()) + "]";
}

std::string complex_list(const std::vector<cplx>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + complex_json(v[i]);
  return s + "]";
}

}  // namespace

std::string draw_to_json(const Draw& d) {
  std::string s = "{\"p\":" + complex_json(d.base.p()) + ",\"q\":" + complex_json(d.base.q()) +
                  ",\"n\":" + std::to_string(d.n) + ",\"m\":" + std::to_string(d.m) +
                  ",\"t\":" + complex_list(d.t);
  if (!d.aux.empty()) s += ",\"aux\":" + complex_list(d.aux);
  if (!d.a.empty()) {
    s += ",\"a\":[";
    for (std::size_t i = 0; i < d.a.size(); ++i) s += (i ? "," : "") + format_real(d.a[i]);
    s += "]";
  }
  return s + "}";
}

IdentityReport make_report(std::string name, const Draw& d, double residual, double scale,
                           double tol, std::int64_t nodes_used) {
  IdentityReport r;
  r.name = std::move(name);
  r.residual = residual;
  r.scale = scale > 0 && std::isfinite(scale) ? scale : 1e-300;
  r.tol = tol;
  r.pass = residual <= tol;  // false for NaN
  r.params_echo = draw_to_json(d);
  r.nodes_used = nodes_used;
  r.seed = d.seed;
  return r;
}

std::string to_line(const IdentityReport& r) {
  return "{\"name\":" + quote(r.name) + ",\"residual\":" + format_real(r.residual) +
         ",\"scale\":" + format_real(r.scale) + ",\"tol\":" + format_real(r.tol) +
         ",\"pass\":" + (r.pass ? "true" : "false") + ",\"params_echo\":" + r.params_echo +
         ",\"nodes_used\":" + std::to_string(r.nodes_used) + ",\"seed\":" + std::to_string(r.seed) +
         "}";
}

IdentityReport parse_line(const std::string& line) {
  const auto j = nlohmann::json::parse(line);
  IdentityReport r;
  auto real = [&](const char* key) {
    const auto& v = j.at(key);
    if (v.is_number()) return v.get<double>();
    return std::nan("");
  };
  r.name = j.at("name").get<std::string>();
  r.residual = real("residual");
  r.scale = real("scale");
  r.tol = real("tol");
  r.pass = j.at("pass").get<bool>();
  r.params_echo = j.at("params_echo").dump();
  r.nodes_used = j.at("nodes_used").get<std::int64_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  return r;
}

}  // namespace ehi
