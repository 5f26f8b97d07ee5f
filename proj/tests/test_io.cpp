#include <doctest.h>

#include <cmath>

#include "diskzeroes/io.hpp"

using namespace dz;
namespace io = dz::io;

TEST_SUITE_BEGIN("io");

TEST_CASE("number formatting") {
  CHECK(io::fmt_shortest(std::log(0.5)) == "-0.6931471805599453");
  CHECK(io::fmt17(1.0) == "1");
  // 17 significant digits round-trip any double
  double v = 0.1 + 0.2;
  CHECK(std::stod(io::fmt17(v)) == v);
}

TEST_CASE("domain and family schemas") {
  auto j = io::json::parse(
      R"({"disks":[{"c":[0.0,0.0],"r":0.5},{"c":[0.4,0.0],"r":0.3}]})");
  auto d = io::parse_domain(j);
  CHECK(d.disks.size() == 2);
  CHECK(d.disks[1].center.real() == doctest::Approx(0.4));

  auto fam = io::parse_family(io::json::parse(R"({"seed":1,"count":3,"a":0.5})"));
  CHECK(fam.size() == 3);
  auto dyadic = io::parse_family(io::json::parse(R"({"model":"dyadic_disks","j_max":4})"));
  CHECK(dyadic.size() == 4);
  CHECK(dyadic[3].disks[0].radius == doctest::Approx(0.9375));

  CHECK_THROWS_AS(io::parse_domain(io::json::parse(R"({"disks":[]})")),
                  io::ConfigError);
}

TEST_CASE("sequence, weight, kernel, mc schemas") {
  auto seq = io::parse_sequence(
      io::json::parse(R"({"points":[{"z":[0.5,0.0],"m":2},{"z":[0.0,0.3]}]})"));
  CHECK(seq.total_multiplicity() == 3);
  auto dy = io::parse_sequence(io::json::parse(R"({"model":"dyadic","k_max":5})"));
  CHECK(dy.entries.size() == 5);

  auto w = io::parse_weight(io::json::parse(R"({"kind":"power_log","p":1.5})"));
  CHECK(weight_value(w, 0.5) == doctest::Approx(1.5 * std::log(2.0)));
  CHECK_THROWS_AS(io::parse_weight(io::json::parse(R"({"kind":"power_log"})")),
                  io::ConfigError);

  auto k = io::parse_kernel(io::json::parse(R"({"kernel":"bomash","s":2})"));
  CHECK(std::get<BomashKernel>(k).s == 2.0);
  CHECK_THROWS_AS(io::parse_kernel(io::json::parse(R"({"kernel":"nope"})")),
                  io::ConfigError);

  auto mc = io::parse_mc(io::json::parse(
      R"({"seed":7,"walks":100000,"shell":1e-6,"max_steps":100000})"));
  CHECK(mc.seed == 7);
  CHECK(mc.walks == 100000);
  CHECK_THROWS_AS(
      io::parse_mc(io::json::parse(R"({"walks":10,"shell":1e-6})")),
      io::ConfigError);
  CHECK_THROWS_AS(
      io::parse_mc(io::json::parse(R"({"walks":100000,"shell":0.5})")),
      io::ConfigError);
}

TEST_CASE("reports serialize reproducibly") {
  CriterionReport rep;
  rep.criterion = "radial";
  for (int i = 0; i < 3; ++i) {
    DomainRecord rec;
    rec.domain_id = i;
    rec.outer_radius = 0.5 + 0.1 * i;
    rec.lhs = Estimate{0.1 * i + 1.0 / 3.0, 0.01, 1000, 0};
    rec.rhs = Estimate{0.05, 0.0, 0, 0};
    rec.margin = rec.lhs.value - rec.rhs.value;
    rep.records.push_back(rec);
  }
  rep.finalize();

  std::string a = io::report_to_json(rep);
  std::string b = io::report_to_json(rep);
  CHECK(a == b);  // byte-identical
  CHECK(a.find("\"criterion\":\"radial\"") != std::string::npos);
  CHECK(a.find("\r") == std::string::npos);  // LF only

  std::string csv = io::report_to_csv(rep);
  int rows = 0;
  for (char c : csv)
    if (c == '\n') ++rows;
  CHECK(rows == 4);  // header + 3 records

  // estimates carry their error estimate whenever Monte Carlo contributed
  CHECK(a.find("\"stderr\":0.01") != std::string::npos);

  // the emitted report round-trips through a JSON parser with margins
  // recomputable from lhs/rhs
  auto parsed = io::json::parse(a);
  CHECK(parsed["criterion"] == "radial");
  CHECK(parsed["verdict"].is_string());
  REQUIRE(parsed["records"].size() == 3);
  for (const auto& rec : parsed["records"]) {
    double lhs = rec["lhs"]["value"].get<double>();
    double rhs = rec["rhs"]["value"].get<double>();
    CHECK(rec["margin"].get<double>() == lhs - rhs);
  }
}

TEST_SUITE_END();
