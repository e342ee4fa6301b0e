#pragma once

#include <string>

#include "kummer_app/report.hpp"

namespace kummer::app {

/// Runs the job. Input problems surface as kummer::Error (or JSON errors);
/// failed checks are recorded in the report, never thrown.
Report run(const JobSpec& job);

/// 0 when every check passed, 1 otherwise.
int exit_code(const Report& report);

std::string emit_json(const Report& report);
Report parse_report(const std::string& json);
std::string render_text(const Report& report);

} // namespace kummer::app
