#pragma once

#include <string>

#include "nodal/cli/pipeline.hpp"

namespace nodal {

enum class ReportFormat { Json, Text };

// Deterministic serializations. Rationals and field elements appear as exact
// decimal strings; counts as integers; timings as whole milliseconds.
std::string report_json(const RunReport& report, bool include_timings = true);
std::string report_text(const RunReport& report);

// Writes to `path`, or stdout when empty. Throws Io.
void emit_report(const RunReport& report, ReportFormat format, const std::string& path);

}  // namespace nodal
