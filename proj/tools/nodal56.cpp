// Command-line front end: construct, verify, kernel, orbit, discriminant.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nodal/cli/parser.hpp"
#include "nodal/cli/pipeline.hpp"
#include "nodal/cli/report.hpp"
#include "nodal/verify/group.hpp"

using namespace nodal;

namespace {

struct Options {
  std::string quartic = kKleinQuartic;
  std::string g;  // empty: the known splitting for Klein, greedy otherwise
  std::string perturb;
  std::string transform;
  std::vector<std::string> primes;
  std::string format = "json";
  std::string out;
  std::uint64_t budget = 100000000;
  std::string surface;
  int retries = 24;
  unsigned threads = 0;
  std::string group = "auto";
  bool no_certify = false;
};

RunConfig make_config(const Options& o) {
  RunConfig cfg;
  cfg.quartic = o.quartic;
  cfg.g = !o.g.empty() ? o.g : o.quartic == kKleinQuartic ? kKleinSplitting : "greedy";
  if (!o.perturb.empty()) cfg.perturbation = parse_perturbation(o.perturb);
  if (!o.transform.empty()) cfg.transform = parse_transform(o.transform);
  if (!o.primes.empty()) {
    cfg.fields.clear();
    for (const auto& p : o.primes) {
      FieldSpec spec = parse_field_spec(p);
      FqField check(spec.p, spec.k);  // validates the modulus
      cfg.fields.push_back(spec);
    }
  }
  cfg.budget = o.budget;
  cfg.surface = o.surface;
  cfg.retries = o.retries;
  cfg.threads = o.threads;
  cfg.certify = !o.no_certify;
  cfg.group = o.group == "on" ? GroupMode::On : o.group == "off" ? GroupMode::Off : GroupMode::Auto;
  return cfg;
}

void add_common(CLI::App* app, Options& o) {
  app->add_option("--quartic", o.quartic, "Plane quartic in z0..z2 (expression or file)");
  app->add_option("--g", o.g, "Bidegree-(2,2) splitting in u0..u2, v0..v2, or 'greedy' (default for non-Klein input)");
  app->add_option("--perturb", o.perturb, "c1,...,c6[;lambda]: g_tilde -> lambda*g_tilde + sum c_m * (p_ij p_kl)_m");
  app->add_option("--transform", o.transform, "16 rationals, row-major: x -> M x");
  app->add_option("--prime", o.primes, "Verification field p or p^k (repeatable)");
  app->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app->add_option("--out", o.out, "Output path (default stdout)");
  app->add_option("--budget", o.budget, "Maximum points per projective scan");
  app->add_option("--retries", o.retries, "Random perturbation retries on degenerate sections");
  app->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  app->add_option("--group", o.group, "G336 checks: auto, on or off")->check(CLI::IsMember({"auto", "on", "off"}));
  app->add_flag("--no-certify", o.no_certify, "Skip the cofactor certificate");
}

ReportFormat format_of(const Options& o) { return o.format == "text" ? ReportFormat::Text : ReportFormat::Json; }

void write(const std::string& body, const std::string& path) {
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot open " + path);
  out << body;
}

int run_kernel(const Options& o) {
  RunConfig cfg = make_config(o);
  QuarticCurve curve(parse_poly(read_expression_source(cfg.quartic), VarSet::z()));
  assert_smooth_quartic(curve);
  MuKernel k = mu_kernel(curve);
  std::optional<QPoly> g;
  if (cfg.g != "greedy") g = parse_poly(read_expression_source(cfg.g), VarSet::uv());
  SectionBasis s = make_section_basis(curve, g, cfg.perturbation);
  SectionCheck c = check_section_basis(curve, s);
  std::ostringstream os;
  if (o.format == "json") {
    os << "{\n  \"h0_omega2\": " << k.h0_omega2 << ",\n  \"sym_square\": " << k.source_dim << ",\n  \"h0_omega4\": "
       << k.target_dim << ",\n  \"mu_rank\": " << k.rank << ",\n  \"kernel\": " << k.basis.size()
       << ",\n  \"product_rank\": " << c.product_rank << ",\n  \"section_rank\": " << c.total_rank
       << ",\n  \"g_tilde\": \"" << to_string(s.g_tilde) << "\"\n}\n";
  } else {
    os << "h0(w^2) = " << k.h0_omega2 << ", S^2 = " << k.source_dim << ", h0(w^4) = " << k.target_dim
       << ", rank mu = " << k.rank << ", dim ker = " << k.basis.size() << "\n";
    os << "products rank " << c.product_rank << ", sections rank " << c.total_rank << "\n";
    os << "g_tilde = " << to_string(s.g_tilde) << "\n";
  }
  write(os.str(), o.out);
  return 0;
}

int run_orbit(const Options& o) {
  RunConfig cfg = make_config(o);
  std::ostringstream os;
  nlohmann::ordered_json fields = nlohmann::ordered_json::array();
  bool ok = true;
  for (const auto& spec : cfg.fields) {
    FqField field(spec.p, spec.k);
    GroupClosure g = build_G336(field);
    OrbitData d = orbit_and_stabilizer(g.elements, ProjPoint(4, field.one()));
    ok &= g.elements.size() == 336 && d.orbit.size() == 56 && d.stabilizer == 6;
    fields.push_back({{"field", field.name()},
                      {"group_order", g.elements.size()},
                      {"involution_central", g.involution_central},
                      {"orbit", d.orbit.size()},
                      {"stabilizer", d.stabilizer}});
    os << field.name() << ": group order " << g.elements.size() << ", involution central "
       << (g.involution_central ? "yes" : "no") << ", orbit of (1:1:1:1) " << d.orbit.size() << ", stabilizer "
       << d.stabilizer << "\n";
  }
  if (o.format == "json") {
    os.str("");
    os << nlohmann::ordered_json{{"fields", fields}}.dump(2) << "\n";
  }
  write(os.str(), o.out);
  return ok ? 0 : 1;
}

int run_discriminant(const Options& o) {
  RunConfig cfg = make_config(o);
  cfg.fields.clear();
  RunReport r = run_construct(cfg);
  std::ostringstream os;
  if (o.format == "json")
    os << "{\n  \"disc_degree\": " << r.disc_degree << ",\n  \"discriminant\": \"" << to_string(*r.discriminant)
       << "\"\n}\n";
  else
    os << "degree " << r.disc_degree << "\n" << to_string(*r.discriminant) << "\n";
  write(os.str(), o.out);
  return r.disc_degree == 12 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct and verify sextic surfaces with 56 nodes from plane quartics"};
  app.require_subcommand(1);
  Options o;
  auto* construct = app.add_subcommand("construct", "Build the sextic and verify it");
  auto* verify = app.add_subcommand("verify", "Verify a given sextic");
  auto* kernel = app.add_subcommand("kernel", "Dimensions of ker mu and the section basis");
  auto* orbit = app.add_subcommand("orbit", "G336 closure and the orbit of (1:1:1:1)");
  auto* disc = app.add_subcommand("discriminant", "Discriminant curve of the constructed sextic");
  for (auto* sub : {construct, verify, kernel, orbit, disc}) add_common(sub, o);
  verify->add_option("--surface", o.surface, "Sextic in x0..x3 (expression or file)")->required();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  try {
    if (construct->parsed() || verify->parsed()) {
      RunConfig cfg = make_config(o);
      RunReport r = construct->parsed() ? run_construct(cfg) : run_verify(cfg);
      emit_report(r, format_of(o), o.out);
      return r.pass ? 0 : 1;
    }
    if (kernel->parsed()) return run_kernel(o);
    if (orbit->parsed()) return run_orbit(o);
    if (disc->parsed()) return run_discriminant(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
