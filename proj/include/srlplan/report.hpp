#pragma once

#include <string>
#include <vector>

#include "srlplan/scenario.hpp"
#include "srlplan/sim_engine.hpp"

namespace srlplan {

// "resolved default:" lines echoing every config default the parser applied.
std::string format_defaults_banner(const std::vector<std::string>& applied_defaults);

// Human-readable run summary: moment statistics in N*m (plus the %BM
// normalization 100*|M| / (body_mass * g0 * 1 m), a convention of this
// tool), per-limb max deviations in degrees, and the fallback count.
std::string format_summary(const Scenario& scenario, const RunSummary& summary);

// Compensated-vs-uncompensated reduction block, absolute and percent.
std::string format_reduction(const std::string& case_label, const ReductionReport& report);

}  // namespace srlplan
