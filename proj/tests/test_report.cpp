#include <doctest.h>

#include <cmath>
#include <json.hpp>
#include <limits>

#include "ehi/report.hpp"

using ehi::cplx;

namespace {

ehi::Draw sample_draw() {
  ehi::Draw d;
  d.seed = 12345678901234ull;
  d.base = ehi::BasePair(cplx(0.21, -0.05), cplx(0.1, 0.3));
  d.n = 2;
  d.m = 1;
  d.t = {cplx(0.1, 0.2), cplx(1.0 / 3.0, -2.0 / 7.0)};
  d.aux = {cplx(0.9)};
  d.a = {0.5, 1.5};
  return d;
}

}  // namespace

TEST_CASE("format_real round-trips doubles") {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0, 5e-324}) {
    const auto s = ehi::format_real(x);
    CHECK(std::strtod(s.c_str(), nullptr) == x);
  }
  CHECK(ehi::format_real(std::nan("")) == "null");
  CHECK(ehi::format_real(std::numeric_limits<double>::infinity()) == "null");
}

TEST_CASE("report line round trip") {
  const auto d = sample_draw();
  const auto r = ehi::make_report("theta-addition", d, 3.5e-14, 2.0, 1e-11, 1536);
  CHECK(r.pass);
  const auto line = ehi::to_line(r);
  CHECK(line.find('\n') == std::string::npos);
  const auto back = ehi::parse_line(line);
  CHECK(back.name == r.name);
  CHECK(back.residual == r.residual);
  CHECK(back.scale == r.scale);
  CHECK(back.tol == r.tol);
  CHECK(back.pass == r.pass);
  CHECK(back.nodes_used == 1536);
  CHECK(back.seed == d.seed);

  const auto echo = nlohmann::json::parse(r.params_echo);
  CHECK(echo.at("n") == 2);
  CHECK(echo.at("t").size() == 2);
  CHECK(echo.at("t")[1][0].get<double>() == 1.0 / 3.0);
  CHECK(echo.at("a")[1].get<double>() == 1.5);
  CHECK(echo.at("p")[1].get<double>() == -0.05);
}

TEST_CASE("non-finite residuals are written as null and fail") {
  const auto r = ehi::make_report("x", sample_draw(), std::nan(""), 0.0, 1e-8, 0);
  CHECK_FALSE(r.pass);
  CHECK(r.scale > 0);
  const auto line = ehi::to_line(r);
  CHECK(line.find("\"residual\":null") != std::string::npos);
  CHECK(nlohmann::json::parse(line).at("pass") == false);
  CHECK(std::isnan(ehi::parse_line(line).residual));
}

TEST_CASE("pass is residual <= tol") {
  const auto d = sample_draw();
  CHECK(ehi::make_report("x", d, 1e-8, 1, 1e-8, 0).pass);
  CHECK_FALSE(ehi::make_report("x", d, 1.0000001e-8, 1, 1e-8, 0).pass);
}
