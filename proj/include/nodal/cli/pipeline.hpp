#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nodal/curve/mu_kernel.hpp"
#include "nodal/relation/solver.hpp"
#include "nodal/surface/surface.hpp"
#include "nodal/verify/census.hpp"
#include "nodal/verify/dual.hpp"
#include "nodal/verify/fq.hpp"

namespace nodal {

inline constexpr const char* kKleinQuartic = "z0*z1^3 + z1*z2^3 + z2*z0^3";
inline constexpr const char* kKleinSplitting = "u0*u1*v1^2 + u1*u2*v2^2 + u2*u0*v0^2";

enum class GroupMode { Auto, On, Off };

struct RunConfig {
  std::string quartic = kKleinQuartic;
  std::string g = kKleinSplitting;  // or "greedy"
  Perturbation perturbation;
  // Point transform x -> M x; defaults to diag(1,-1,1,1).
  RationalMatrix transform = diagonal_transform({1, -1, 1, 1});
  std::vector<FieldSpec> fields = {{29, 1}, {13, 2}};
  std::uint64_t budget = 100000000;
  unsigned threads = 0;
  // Extra attempts with random perturbations when the sections or the
  // relation come out degenerate, or the census finds more than 56 singular
  // points or a non-nodal one.
  int retries = 24;
  std::uint64_t retry_seed = 20071;
  bool certify = true;
  GroupMode group = GroupMode::Auto;
  std::string surface;  // for verify
};

// Parses "c1,...,c6[;lambda]".
Perturbation parse_perturbation(const std::string& text);
std::string describe(const Perturbation& p);  // "c1,...,c6;lambda"
std::string describe(const RationalMatrix& m);  // row-major, comma separated
std::string describe(const std::vector<FieldSpec>& fields);  // "29,13^2"

// Parses 16 comma- or space-separated rationals, row-major.
RationalMatrix parse_transform(const std::string& text);

struct FieldReport {
  FieldSpec spec;
  std::string name;
  std::size_t singular_count = 0;
  std::vector<int> hessian_ranks;
  bool all_ordinary = false;
  std::vector<std::string> points;
  // Group data, present when the checks ran.
  bool group_checked = false;
  std::size_t group_order = 0;
  std::size_t orbit = 0;
  std::size_t stabilizer = 0;
  bool orbit_equals_census = false;
  bool involution_central = false;
  std::string group_note;
  // Dual-curve sampling (construct only).
  bool dual_checked = false;
  DualCheckResult dual;
  std::string dual_note;  // why the dual check could not run
  bool pass = false;
};

struct RunReport {
  std::string command;
  std::map<std::string, std::string> input;
  std::optional<MuKernel> kernel;
  std::optional<SectionCheck> section_check;
  std::optional<WeightedSexticRelation> relation;
  bool relation_certified = false;
  std::optional<Perturbation> used_perturbation;
  int attempts = 0;
  std::vector<std::string> attempt_log;
  std::optional<SexticSurface> surface;
  std::optional<EvenDecomposition> even;
  bool even_ok = false;
  bool flip_invariant = false;
  std::optional<QPoly> discriminant;
  int disc_degree = -1;
  std::vector<FieldReport> fields;
  std::vector<std::pair<std::string, double>> timings_ms;
  std::vector<std::string> failures;
  bool pass = false;
  std::string verdict() const { return pass ? "PASS" : "FAIL"; }
};

// Construction followed by verification. Stage errors propagate as Error
// with the stage name prefixed to the message.
RunReport run_construct(const RunConfig& cfg);
// Verification of cfg.surface only.
RunReport run_verify(const RunConfig& cfg);

// Per-field census plus optional group and dual checks.
FieldReport verify_field(const QPoly& surface, const FieldSpec& spec, const RunConfig& cfg,
                         const QuarticCurve* curve = nullptr, const QPoly* disc = nullptr);

}  // namespace nodal
