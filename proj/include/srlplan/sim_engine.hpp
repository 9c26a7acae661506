#pragma once

#include <vector>

#include "srlplan/dynamics.hpp"
#include "srlplan/scenario.hpp"

namespace srlplan {

// One logged control step: limb states (in scenario limb order), the moment
// about the reference point, and the planner decision flags of the step that
// produced this state. The t=0 entry carries the initial states and no
// decision.
struct TimeSeriesEntry {
    double time = 0.0;
    std::vector<JointState> states;
    MomentSample moment;
    bool activated = false;
    bool fallback = false;
};

struct TimeSeries {
    std::vector<TimeSeriesEntry> entries;
};

struct RunSummary {
    std::string case_label;
    double max_norm = 0.0;   // N*m, over all logged samples
    double mean_norm = 0.0;  // N*m, arithmetic mean including t=0
    DeviationReport deviation;
    int fallback_count = 0;
};

struct RunResult {
    TimeSeries series;
    RunSummary summary;
};

// Max/mean reductions of a compensated run against its uncompensated
// counterpart. Percentages are (without - with) / without; 0 when the
// uncompensated value is 0.
struct ReductionReport {
    double max_with = 0.0;
    double max_without = 0.0;
    double mean_with = 0.0;
    double mean_without = 0.0;
    double max_reduction = 0.0;       // N*m
    double mean_reduction = 0.0;      // N*m
    double max_reduction_pct = 0.0;   // %
    double mean_reduction_pct = 0.0;  // %
};

// Fixed-step scenario executor. Each control loop plans (or coasts when
// compensation is disabled), advances every limb one closed-form
// constant-acceleration step, and logs the moment. The deviation report is
// recomputed from the logged series against the reference trajectories, not
// taken from the planner. Throws std::invalid_argument on scenario
// invariant violations before any stepping.
RunResult run_scenario(const Scenario& scenario);

ReductionReport compare_runs(const RunSummary& with_comp, const RunSummary& without_comp);

}  // namespace srlplan
