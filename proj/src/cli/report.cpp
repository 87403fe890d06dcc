#include "nodal/cli/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace nodal {

namespace {

using nlohmann::ordered_json;

ordered_json field_json(const FieldReport& f) {
  ordered_json j;
  j["p"] = f.spec.p;
  j["k"] = f.spec.k;
  j["field"] = f.name;
  j["singular_count"] = f.singular_count;
  j["hessian_ranks"] = f.hessian_ranks;
  j["all_ordinary"] = f.all_ordinary;
  if (f.group_checked) {
    j["orbit"] = f.orbit;
    j["stabilizer"] = f.stabilizer;
    j["group_order"] = f.group_order;
    j["orbit_equals_census"] = f.orbit_equals_census;
    j["involution_central"] = f.involution_central;
  } else {
    j["orbit"] = nullptr;
    j["stabilizer"] = nullptr;
    j["group_order"] = nullptr;
  }
  if (!f.group_note.empty()) j["group_note"] = f.group_note;
  if (f.dual_checked) {
    j["dual_check"] = {{"curve_points", f.dual.curve_points},
                       {"smooth_points", f.dual.smooth_points},
                       {"zeros", f.dual.zeros},
                       {"pass", f.dual.pass}};
  }
  if (!f.dual_note.empty()) j["dual_note"] = f.dual_note;
  j["points"] = f.points;
  j["pass"] = f.pass;
  return j;
}

}  // namespace

std::string report_json(const RunReport& r, bool include_timings) {
  ordered_json j;
  j["command"] = r.command;
  ordered_json in = ordered_json::object();
  for (const auto& [k, v] : r.input) in[k] = v;
  j["input"] = in;
  if (r.kernel) {
    j["kernel_dims"] = {{"h0_omega2", r.kernel->h0_omega2},
                        {"sym_square", r.kernel->source_dim},
                        {"h0_omega4", r.kernel->target_dim},
                        {"mu_rank", r.kernel->rank},
                        {"kernel", r.kernel->basis.size()}};
    if (r.section_check) {
      j["kernel_dims"]["product_rank"] = r.section_check->product_rank;
      j["kernel_dims"]["section_rank"] = r.section_check->total_rank;
    }
  } else {
    j["kernel_dims"] = nullptr;
  }
  if (r.relation) {
    j["relation"] = to_string(r.relation->p);
    j["nullspace_dim"] = r.relation->nullspace_dim;
    j["modular_nullspace_dims"] = r.relation->modular_nullspace_dims;
    j["raw_y3_cubed"] = to_string(r.relation->raw_y3_cubed);
    j["relation_certified"] = r.relation_certified;
    j["attempts"] = r.attempts;
    j["attempt_log"] = r.attempt_log;
    if (r.used_perturbation) j["perturbation"] = describe(*r.used_perturbation);
  } else {
    j["relation"] = nullptr;
    j["nullspace_dim"] = nullptr;
  }
  j["surface"] = r.surface ? ordered_json(to_string(r.surface->P)) : ordered_json(nullptr);
  if (r.even) {
    j["even_parts"] = {{"p6", to_string(r.even->p6)},
                       {"p4", to_string(r.even->p4)},
                       {"p2", to_string(r.even->p2)},
                       {"c", to_string(r.even->c)}};
  } else {
    j["even_parts"] = nullptr;
  }
  j["flip_invariant"] = r.flip_invariant;
  j["disc_degree"] = r.disc_degree >= 0 ? ordered_json(r.disc_degree) : ordered_json(nullptr);
  j["fields"] = ordered_json::array();
  for (const auto& f : r.fields) j["fields"].push_back(field_json(f));
  j["failures"] = r.failures;
  j["verdict"] = r.verdict();
  if (include_timings) {
    ordered_json t = ordered_json::object();
    for (const auto& [k, v] : r.timings_ms) t[k] = static_cast<long long>(v + 0.5);
    j["timings_ms"] = t;
  }
  return j.dump(2) + "\n";
}

std::string report_text(const RunReport& r) {
  std::ostringstream os;
  os << "command: " << r.command << "\n";
  for (const auto& [k, v] : r.input) os << "input." << k << ": " << v << "\n";
  if (r.kernel)
    os << "kernel: h0(w^2)=" << r.kernel->h0_omega2 << " S^2=" << r.kernel->source_dim
       << " h0(w^4)=" << r.kernel->target_dim << " rank=" << r.kernel->rank << " dim ker=" << r.kernel->basis.size()
       << "\n";
  if (r.section_check)
    os << "sections: products rank " << r.section_check->product_rank << ", with g_tilde " << r.section_check->total_rank
       << "\n";
  if (r.relation) {
    os << "relation: " << to_string(r.relation->p) << "\n";
    os << "nullspace_dim: " << r.relation->nullspace_dim << " (mod p:";
    for (auto d : r.relation->modular_nullspace_dims) os << " " << d;
    os << ")\n";
    os << "certified: " << (r.relation_certified ? "yes" : "no") << ", attempts: " << r.attempts << "\n";
    for (const auto& a : r.attempt_log) os << "  attempt " << a << "\n";
  }
  if (r.surface) os << "surface: " << to_string(r.surface->P) << "\n";
  if (r.even)
    os << "even_parts: p6 = " << to_string(r.even->p6) << "; p4 = " << to_string(r.even->p4)
       << "; p2 = " << to_string(r.even->p2) << "; c = " << to_string(r.even->c) << "\n";
  if (r.disc_degree >= 0) os << "disc_degree: " << r.disc_degree << "\n";
  for (const auto& f : r.fields) {
    std::size_t rank3 = 0;
    for (int h : f.hessian_ranks) rank3 += h == 3;
    os << "field " << f.name << ": singular " << f.singular_count << ", hessian rank 3 at " << rank3;
    if (f.group_checked)
      os << ", group " << f.group_order << ", orbit " << f.orbit << ", stabilizer " << f.stabilizer
         << (f.orbit_equals_census ? ", orbit = census" : ", orbit != census");
    if (f.dual_checked) os << ", dual " << f.dual.zeros << "/" << f.dual.smooth_points;
    os << (f.pass ? "  [pass]" : "  [FAIL]") << "\n";
  }
  for (const auto& f : r.failures) os << "failure: " << f << "\n";
  os << "verdict: " << r.verdict() << "\n";
  for (const auto& [k, v] : r.timings_ms) os << "time." << k << ": " << static_cast<long long>(v + 0.5) << " ms\n";
  return os.str();
}

void emit_report(const RunReport& report, ReportFormat format, const std::string& path) {
  const std::string body = format == ReportFormat::Json ? report_json(report) : report_text(report);
  if (path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot open " + path);
  out << body;
  if (!out) throw Error(ErrorKind::Io, "write failed: " + path);
}

}  // namespace nodal
