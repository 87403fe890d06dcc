#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "nodal/cli/pipeline.hpp"
#include "nodal/cli/report.hpp"
#include "support.hpp"

using namespace nodal;
using namespace nodal::testing;
using nlohmann::json;

namespace {

const char* kQ =
    "x0^5*x2 - 5*x0^2*x1^2*x2^2 + x0*x1^5 + x1*x2^5 + x0^3*x1*x3^2 + x0*x2^3*x3^2 + x1^3*x2*x3^2 - x3^6";

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Io;
}

RunConfig klein_config() {
  RunConfig cfg;
  cfg.threads = 2;
  return cfg;
}

const RunReport& klein_report() {
  static const RunReport r = run_construct(klein_config());
  return r;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("config parsing") {
  Perturbation p = parse_perturbation("1,0,-2,1/2,0,0;3");
  CHECK(p.coeffs[2] == -2);
  CHECK(p.coeffs[3] == make_rational(1, 2));
  CHECK(p.lambda == 3);
  CHECK(describe(p) == "1,0,-2,1/2,0,0;3");
  CHECK(parse_perturbation("0,0,0,0,0,0").is_identity());
  CHECK(kind_of([] { parse_perturbation("1,2,3"); }) == ErrorKind::InvalidConfig);
  CHECK(kind_of([] { parse_perturbation("1,2,3,4,5,x"); }) == ErrorKind::InvalidConfig);

  RationalMatrix m = parse_transform("1 0 0 0, 0 -1 0 0, 0 0 1 0, 0 0 0 1/2");
  CHECK(m(1, 1) == -1);
  CHECK(m(3, 3) == make_rational(1, 2));
  CHECK(describe(m) == "1,0,0,0,0,-1,0,0,0,0,1,0,0,0,0,1/2");
  CHECK(kind_of([] { parse_transform("1 2 3"); }) == ErrorKind::InvalidConfig);
  CHECK(describe(std::vector<FieldSpec>{{29, 1}, {13, 2}}) == "29,13^2");
}

TEST_CASE("expression sources") {
  const std::string path = "nodal_test_expr.txt";
  {
    std::ofstream out(path);
    out << "z0^4 + z1^4\n+ z2^4\n";
  }
  CHECK(parse_poly(read_expression_source(path), VarSet::z()) == Z("z0^4 + z1^4 + z2^4"));
  std::remove(path.c_str());
  CHECK(read_expression_source("z0^4") == "z0^4");
}

TEST_CASE("default construct run reproduces the Klein surface") {
  const RunReport& r = klein_report();
  CHECK(r.pass);
  CHECK(r.verdict() == "PASS");
  REQUIRE(r.surface);
  CHECK(to_string(r.surface->P) == to_string(X(kQ)));
  CHECK(r.relation_certified);
  CHECK(r.attempts == 1);
  CHECK(r.disc_degree == 12);
  REQUIRE(r.fields.size() == 2);
  for (const auto& f : r.fields) {
    CHECK(f.singular_count == 56);
    CHECK(f.all_ordinary);
    CHECK(f.dual_checked);
    CHECK(f.dual.pass);
  }
  CHECK(r.fields[0].group_checked);
  CHECK(r.fields[0].group_order == 336);
  CHECK(r.fields[0].orbit == 56);
  CHECK(r.fields[0].stabilizer == 6);
  CHECK(r.fields[0].orbit_equals_census);
}

TEST_CASE("JSON report schema") {
  json j = json::parse(report_json(klein_report()));
  for (const char* key : {"command", "input", "kernel_dims", "relation", "nullspace_dim", "modular_nullspace_dims",
                          "relation_certified", "attempts", "surface", "even_parts", "flip_invariant", "disc_degree",
                          "fields", "failures", "verdict", "timings_ms"})
    CHECK_MESSAGE(j.contains(key), key);
  CHECK(j["verdict"] == "PASS");
  CHECK(j["surface"] == to_string(X(kQ)));
  CHECK(j["kernel_dims"]["kernel"] == 7);
  CHECK(j["kernel_dims"]["sym_square"] == 21);
  CHECK(j["kernel_dims"]["h0_omega4"] == 14);
  CHECK(j["even_parts"]["c"] == "-1");
  REQUIRE(j["fields"].size() == 2);
  auto f = j["fields"][0];
  CHECK(f["field"] == "F_29");
  CHECK(f["singular_count"] == 56);
  CHECK(f["orbit"] == 56);
  CHECK(f["stabilizer"] == 6);
  CHECK(f["points"].size() == 56);
  CHECK(f["points"][0].is_string());
  // 168 = 7 * 24, so F_13^2 carries the group as well.
  CHECK(j["fields"][1]["orbit"] == 56);
  for (auto& [stage, ms] : j["timings_ms"].items()) CHECK(ms.is_number_integer());
}

TEST_CASE("reports are deterministic apart from timings") {
  RunConfig cfg = klein_config();
  cfg.fields = {{29, 1}};
  cfg.threads = 1;
  std::string a = report_json(run_construct(cfg), false);
  cfg.threads = 3;
  std::string b = report_json(run_construct(cfg), false);
  CHECK(a == b);
  CHECK(json::parse(a).contains("timings_ms") == false);
}

TEST_CASE("empty field list") {
  RunConfig cfg = klein_config();
  cfg.fields.clear();
  RunReport r = run_construct(cfg);
  json j = json::parse(report_json(r));
  CHECK(j["fields"].is_array());
  CHECK(j["fields"].empty());
  CHECK(r.pass);
}

TEST_CASE("verify command examples") {
  RunConfig cfg;
  cfg.surface = kQ;
  RunReport ok = run_verify(cfg);
  CHECK(ok.pass);
  CHECK(ok.fields.size() == 2);

  cfg.surface = "x0^6 + x1^6 + x2^6 + x3^6";
  RunReport smooth = run_verify(cfg);
  CHECK_FALSE(smooth.pass);
  for (const auto& f : smooth.fields) CHECK(f.singular_count == 0);
  REQUIRE_FALSE(smooth.failures.empty());
  CHECK(smooth.failures[0].find("0 singular points") != std::string::npos);

  cfg.surface = std::string(kQ) + " + x3^6";
  RunReport broken = run_verify(cfg);
  CHECK_FALSE(broken.pass);
  CHECK(broken.verdict() == "FAIL");

  cfg.surface = "x0^5";
  CHECK(kind_of([&] { run_verify(cfg); }) == ErrorKind::NotSextic);
}

TEST_CASE("perturbed Klein sections still give one relation") {
  RunConfig cfg = klein_config();
  cfg.perturbation = parse_perturbation("1,0,0,0,0,0");
  cfg.fields = {{13, 2}};
  cfg.group = GroupMode::Off;
  cfg.retries = 0;
  RunReport r = run_construct(cfg);
  REQUIRE(r.relation);
  CHECK(r.relation->nullspace_dim == 1);
  CHECK(r.relation_certified);
  // Fewer nodes are rational here; the run must say so rather than pass.
  REQUIRE(r.fields.size() == 1);
  CHECK(r.fields[0].singular_count < 56);
  CHECK_FALSE(r.pass);
  REQUIRE_FALSE(r.failures.empty());
  CHECK(r.failures[0].find("singular points (expected 56)") != std::string::npos);
}

TEST_CASE("construct errors carry the stage") {
  RunConfig cfg;
  cfg.quartic = "z0^4";
  cfg.g = "greedy";
  try {
    run_construct(cfg);
    FAIL("expected SingularQuartic");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularQuartic);
    CHECK(std::string(e.what()).find("assert_smooth_quartic") != std::string::npos);
  }
  cfg = RunConfig{};
  cfg.g = "u0^2*v0^2";
  CHECK(kind_of([&] { run_construct(cfg); }) == ErrorKind::ExplicitGMismatch);
  cfg = RunConfig{};
  cfg.quartic = "z0^4 + q";
  CHECK(kind_of([&] { run_construct(cfg); }) == ErrorKind::UnknownVariable);
}

TEST_CASE("text report") {
  std::string t = report_text(klein_report());
  CHECK(t.find("verdict: PASS") != std::string::npos);
  CHECK(t.find("F_13^2") != std::string::npos);
}

}  // TEST_SUITE
