#include "nodal/cli/pipeline.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "nodal/cli/parser.hpp"
#include "nodal/verify/group.hpp"

namespace nodal {

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(RunReport& r) : report_(r), start_(std::chrono::steady_clock::now()) {}
  void lap(const std::string& stage) {
    auto now = std::chrono::steady_clock::now();
    report_.timings_ms.emplace_back(stage, std::chrono::duration<double, std::milli>(now - start_).count());
    start_ = now;
  }

 private:
  RunReport& report_;
  std::chrono::steady_clock::time_point start_;
};

template <class Fn>
auto stage(const std::string& name, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.kind(), name + ": " + e.what());
  }
}

std::vector<std::string> split_numbers(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Rational parse_config_rational(const std::string& s) {
  auto r = parse_rational(s);
  if (!r) throw Error(ErrorKind::InvalidConfig, "not a rational number: '" + s + "'");
  return *r;
}

bool block_diagonal(const RationalMatrix& m) {
  for (int i = 0; i < 3; ++i)
    if (sgn(m(i, 3)) != 0 || sgn(m(3, i)) != 0) return false;
  return true;
}

std::string field_failure(const FieldReport& f) {
  std::ostringstream os;
  os << f.name << ":";
  if (f.singular_count != 56) os << " " << f.singular_count << " singular points (expected 56)";
  if (!f.all_ordinary) os << " non-ordinary singular points present";
  if (f.group_checked && (f.group_order != 336 || f.orbit != 56 || f.stabilizer != 6 || !f.orbit_equals_census ||
                          !f.involution_central))
    os << " group certificate failed (order " << f.group_order << ", orbit " << f.orbit << ", stabilizer "
       << f.stabilizer << ")";
  if (!f.group_note.empty() && !f.group_checked) os << " " << f.group_note;
  if (f.dual_checked && !f.dual.pass && !f.dual_note.empty())
    os << " " << f.dual_note;
  else if (f.dual_checked && !f.dual.pass)
    os << " discriminant misses " << (f.dual.smooth_points - f.dual.zeros) << " of " << f.dual.smooth_points
       << " dual points";
  return os.str();
}

}  // namespace

std::string describe(const Perturbation& p) {
  std::string s;
  for (int i = 0; i < 6; ++i) s += (i ? "," : "") + to_string(p.coeffs[i]);
  return s + ";" + to_string(p.lambda);
}

std::string describe(const RationalMatrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s += (i || j ? "," : "") + to_string(m(i, j));
  return s;
}

std::string describe(const std::vector<FieldSpec>& fields) {
  std::string s;
  for (const auto& f : fields) s += (s.empty() ? "" : ",") + std::to_string(f.p) + (f.k == 2 ? "^2" : "");
  return s;
}

Perturbation parse_perturbation(const std::string& text) {
  Perturbation p;
  std::string coeffs = text, lambda;
  if (auto semi = text.find(';'); semi != std::string::npos) {
    coeffs = text.substr(0, semi);
    lambda = text.substr(semi + 1);
  }
  auto parts = split_numbers(coeffs);
  if (parts.size() != 6) throw Error(ErrorKind::InvalidConfig, "perturbation needs six coefficients, got " + std::to_string(parts.size()));
  for (int i = 0; i < 6; ++i) p.coeffs[i] = parse_config_rational(parts[i]);
  if (auto l = split_numbers(lambda); !l.empty()) {
    if (l.size() != 1) throw Error(ErrorKind::InvalidConfig, "perturbation takes a single lambda");
    p.lambda = parse_config_rational(l[0]);
  }
  if (sgn(p.lambda) == 0) throw Error(ErrorKind::ZeroLambda, "lambda must be nonzero");
  return p;
}

RationalMatrix parse_transform(const std::string& text) {
  auto parts = split_numbers(text);
  if (parts.size() != 16) throw Error(ErrorKind::InvalidConfig, "transform needs 16 entries, got " + std::to_string(parts.size()));
  RationalMatrix m(4, 4);
  for (int i = 0; i < 16; ++i) m(i / 4, i % 4) = parse_config_rational(parts[i]);
  return m;
}

FieldReport verify_field(const QPoly& surface, const FieldSpec& spec, const RunConfig& cfg, const QuarticCurve* curve,
                         const QPoly* disc) {
  FqField field(spec.p, spec.k);
  FieldReport fr;
  fr.spec = spec;
  fr.name = field.name();
  ScanOptions opts;
  opts.budget = cfg.budget;
  opts.threads = cfg.threads;
  NodeReport nodes = node_census(surface, field, opts);
  fr.singular_count = nodes.points.size();
  fr.hessian_ranks = nodes.hessian_ranks;
  fr.all_ordinary = nodes.all_ordinary;
  for (const auto& pt : nodes.points) fr.points.push_back(to_string(pt));

  if (cfg.group != GroupMode::Off) {
    bool applicable = field.zeta7().has_value();
    if (!applicable) fr.group_note = "no seventh root of unity in " + field.name();
    const FqPoly s = reduce_mod_q(surface, field);
    std::optional<KleinGenerators> gens;
    if (applicable) {
      gens = klein_generators(field);
      try {
        invariance_scalar(s, gens->g7);
        invariance_scalar(s, gens->g2);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotInvariant) throw;
        applicable = false;
        fr.group_note = "surface is not invariant under g7 and g2";
      }
    }
    if (applicable) {
      fr.group_checked = true;
      try {
        GroupClosure g = build_G336(field);
        fr.group_order = g.elements.size();
        fr.involution_central = g.involution_central;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::OrderMismatch) throw;
        fr.group_note = e.what();
      }
      if (fr.group_order == 336) {
        auto elements = close_group({gens->g7, gens->g2});
        const ProjPoint base(4, field.one());
        OrbitData orbit = orbit_and_stabilizer(elements, base);
        fr.orbit = orbit.orbit.size();
        fr.stabilizer = orbit.stabilizer;
        fr.orbit_equals_census = orbit.orbit == nodes.points;
      }
    } else if (cfg.group == GroupMode::On) {
      fr.group_checked = true;  // requested but impossible: counts as a failure
    }
  }

  if (curve && disc) {
    if (block_diagonal(cfg.transform)) {
      RationalMatrix plane(3, 3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) plane(i, j) = cfg.transform(i, j);
      try {
        fr.dual = dual_curve_samples_check(*curve, *disc, field, plane);
        fr.dual_checked = true;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoCurvePoints && e.kind() != ErrorKind::DiscIdenticallyZeroModP) throw;
        fr.dual_note = e.what();
        // A discriminant that vanishes identically mod p proves nothing: fail.
        if (e.kind() == ErrorKind::DiscIdenticallyZeroModP) {
          fr.dual_checked = true;
          fr.dual.pass = false;
        }
      }
    }
  }

  fr.pass = fr.singular_count == 56 && fr.all_ordinary;
  if (fr.group_checked)
    fr.pass = fr.pass && fr.group_order == 336 && fr.involution_central && fr.orbit == 56 && fr.stabilizer == 6 &&
              fr.orbit_equals_census;
  if (fr.dual_checked) fr.pass = fr.pass && fr.dual.pass;
  return fr;
}

namespace {

Perturbation random_perturbation(std::uint64_t seed, const std::array<bool, 6>& directions) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-2, 2);
  Perturbation p;
  for (int m = 0; m < 6; ++m) {
    const int c = d(rng);
    if (directions[m]) p.coeffs[m] = c;
  }
  return p;
}

bool has_degenerate_singularity(const RunReport& r) {
  for (const auto& f : r.fields)
    if (f.singular_count > 56 || (f.singular_count > 0 && !f.all_ordinary)) return true;
  return false;
}

void clear_verification(RunReport& r) {
  r.surface.reset();
  r.even.reset();
  r.even_ok = false;
  r.flip_invariant = false;
  r.discriminant.reset();
  r.disc_degree = -1;
  r.fields.clear();
  r.failures.clear();
  r.relation_certified = false;
}

bool degenerate(ErrorKind k) {
  return k == ErrorKind::GTildeInSpan || k == ErrorKind::NullspaceDimHigh || k == ErrorKind::NullspaceDimZero ||
         k == ErrorKind::ZeroLeadingCoefficient || k == ErrorKind::KernelDimensionUnexpected;
}

void finish_verification(RunReport& r, const RunConfig& cfg, const QuarticCurve* curve, Stopwatch& clock) {
  const QPoly& P = r.surface->P;
  r.flip_invariant = flip_x3(P) == P;
  try {
    r.even = decompose_even(*r.surface);
    r.even_ok = true;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::OddPowerPresent) throw;
    r.failures.push_back(e.what());
  }
  if (curve && r.even) {
    r.discriminant = stage("cubic_discriminant", [&] { return cubic_discriminant(*r.even); });
    r.disc_degree = r.discriminant->total_degree();
    clock.lap("discriminant");
  }
  for (const auto& spec : cfg.fields) {
    r.fields.push_back(stage("verify " + std::to_string(spec.p) + (spec.k == 2 ? "^2" : ""), [&] {
      return verify_field(P, spec, cfg, curve, r.discriminant ? &*r.discriminant : nullptr);
    }));
    clock.lap("census " + r.fields.back().name);
  }

  if (!r.flip_invariant) r.failures.push_back("surface is not invariant under x3 -> -x3");
  if (curve && r.disc_degree != 12) r.failures.push_back("discriminant has degree " + std::to_string(r.disc_degree));
  for (const auto& f : r.fields)
    if (!f.pass) r.failures.push_back(field_failure(f));
  r.pass = r.failures.empty();
}

}  // namespace

RunReport run_construct(const RunConfig& cfg) {
  RunReport r;
  r.command = "construct";
  Stopwatch clock(r);
  const QuarticCurve curve = stage("parse quartic", [&] {
    return QuarticCurve(parse_poly(read_expression_source(cfg.quartic), VarSet::z()));
  });
  r.input["quartic"] = to_string(curve.f());
  std::optional<QPoly> explicit_g;
  if (cfg.g != "greedy") {
    explicit_g = stage("parse g", [&] { return parse_poly(read_expression_source(cfg.g), VarSet::uv()); });
    r.input["g"] = to_string(*explicit_g);
  } else {
    r.input["g"] = "greedy";
  }
  r.input["perturbation"] = describe(cfg.perturbation);
  r.input["transform"] = describe(cfg.transform);
  r.input["fields"] = describe(cfg.fields);
  stage("assert_smooth_quartic", [&] { return assert_smooth_quartic(curve); });
  clock.lap("smoothness");
  r.kernel = stage("mu_kernel", [&] { return mu_kernel(curve); });
  clock.lap("mu_kernel");

  const IdealBlock block = stage("ideal_subspace_basis", [&] { return ideal_subspace_basis(curve); });
  const QPoly g_sym = explicit_g ? split_to_bidegree(curve, *explicit_g).g_sym : split_to_bidegree(curve).g_sym;
  const auto directions = equivariant_products(curve, g_sym);
  SectionBasis sections;
  for (int attempt = 0;; ++attempt) {
    const Perturbation pert =
        attempt == 0 ? cfg.perturbation : random_perturbation(cfg.retry_seed + attempt, directions);
    r.attempts = attempt + 1;
    const bool last = attempt >= cfg.retries;
    try {
      sections = stage("sections", [&] { return make_section_basis(curve, explicit_g, pert); });
      r.section_check = stage("check_section_basis", [&] { return check_section_basis(curve, sections); });
      r.relation = stage("solve_weighted_relation", [&] { return solve_weighted_relation(block, sections, cfg.threads ? cfg.threads : 4); });
      r.used_perturbation = pert;
    } catch (const Error& e) {
      if (!degenerate(e.kind()) || last) throw;
      r.attempt_log.push_back(describe(pert) + ": " + e.what());
      continue;
    }
    clock.lap("relation");
    if (cfg.certify) {
      stage("certify_relation", [&] { return certify_relation(r.relation->p, curve, sections); });
      r.relation_certified = true;
      clock.lap("certify");
    }
    r.surface = stage("pullback", [&] {
      return apply_point_transform(pullback_to_p3(r.relation->p), cfg.transform);
    });
    finish_verification(r, cfg, &curve, clock);
    // More than 56 singular points, or one worse than a node, means the
    // branch divisor is special. Fewer is a rationality effect, not retried.
    const bool special = has_degenerate_singularity(r);
    r.attempt_log.push_back(describe(pert) + (special ? ": special singularities" : ": ok"));
    if (last || !special) break;
    clear_verification(r);
  }
  if (r.relation->nullspace_dim != 1) r.failures.push_back("relation nullspace is not one-dimensional");
  for (auto d : r.relation->modular_nullspace_dims)
    if (d != r.relation->nullspace_dim) r.failures.push_back("modular nullspace dimension disagrees");
  r.pass = r.failures.empty();
  return r;
}

RunReport run_verify(const RunConfig& cfg) {
  RunReport r;
  r.command = "verify";
  Stopwatch clock(r);
  if (cfg.surface.empty()) throw Error(ErrorKind::InvalidConfig, "verify needs --surface");
  r.surface = stage("parse surface", [&] {
    return make_surface(parse_poly(read_expression_source(cfg.surface), VarSet::x()), "input");
  });
  r.input["surface"] = to_string(r.surface->P);
  r.input["fields"] = describe(cfg.fields);
  clock.lap("parse");
  finish_verification(r, cfg, nullptr, clock);
  return r;
}

}  // namespace nodal
