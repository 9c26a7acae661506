#include "srlplan/sim_engine.hpp"

#include <cmath>
#include <cstddef>

namespace srlplan {

namespace {

// ceil(duration / dt) with protection against the quotient landing one ulp
// above or below an integer.
int step_count(double duration, double dt) {
    const double q = duration / dt;
    const double nearest = std::round(q);
    if (std::abs(q - nearest) < 1e-9) return static_cast<int>(nearest);
    return static_cast<int>(std::ceil(q));
}

DeviationReport recheck_deviation(const Scenario& scenario, const TimeSeries& series,
                                  const ReferenceTrajectory& ref) {
    DeviationReport report;
    report.per_limb.resize(scenario.limbs.size());
    for (std::size_t i = 0; i < scenario.limbs.size(); ++i)
        report.per_limb[i].limb_id = scenario.limbs[i].id;
    for (const TimeSeriesEntry& entry : series.entries) {
        for (std::size_t i = 0; i < scenario.limbs.size(); ++i) {
            const JointState ref_state = ref.eval(scenario.limbs[i].id, entry.time);
            const double dev = deviation(entry.states[i], ref_state);
            if (dev > report.per_limb[i].max_abs_deviation)
                report.per_limb[i].max_abs_deviation = dev;
        }
    }
    for (const auto& limb : report.per_limb)
        if (limb.max_abs_deviation > scenario.planner.deviation_limit) report.violated = true;
    return report;
}

}  // namespace

RunResult run_scenario(const Scenario& scenario) {
    validate(scenario);

    const double dt = scenario.planner.control_dt;
    const int steps = step_count(scenario.duration, dt);
    const ReferenceTrajectory ref = make_reference_trajectory(
        scenario.limbs, scenario.initial_states, scenario.disturbance_limb_id,
        scenario.disturbance);

    std::size_t dist_index = 0;
    std::vector<std::size_t> comp_index;
    for (std::size_t i = 0; i < scenario.limbs.size(); ++i) {
        if (scenario.limbs[i].id == scenario.disturbance_limb_id)
            dist_index = i;
        else
            comp_index.push_back(i);
    }

    RunResult result;
    result.series.entries.reserve(static_cast<std::size_t>(steps) + 1);

    std::vector<JointState> states = scenario.initial_states;
    TimeSeriesEntry first;
    first.time = 0.0;
    first.states = states;
    first.moment = total_moment(scenario.limbs, states, scenario.human, 0.0);
    result.series.entries.push_back(first);

    int fallback_count = 0;
    for (int k = 0; k < steps; ++k) {
        const double t = k * dt;

        bool activated = false;
        bool fallback = false;
        std::vector<double> comp_alphas(comp_index.size(), 0.0);
        if (scenario.compensation_enabled) {
            PlanDecision decision;
            if (scenario.oracle_grid_points >= 2) {
                decision = grid_search_step(states, scenario.limbs, scenario.human, ref, t,
                                            scenario.planner, scenario.oracle_grid_points);
            } else {
                Xoshiro256pp rng =
                    Xoshiro256pp::for_step(scenario.planner.seed, static_cast<std::uint64_t>(k));
                decision = plan_step(rng, states, scenario.limbs, scenario.human, ref, t,
                                     scenario.planner);
            }
            activated = decision.activated;
            fallback = decision.fallback;
            comp_alphas = decision.chosen.alphas;
            if (fallback) ++fallback_count;
        }

        const double dist_alpha = ref.profile(scenario.disturbance_limb_id).alpha_at(t);
        states[dist_index] = integrate_constant_alpha(states[dist_index], dist_alpha, dt);
        for (std::size_t j = 0; j < comp_index.size(); ++j)
            states[comp_index[j]] =
                integrate_constant_alpha(states[comp_index[j]], comp_alphas[j], dt);

        TimeSeriesEntry entry;
        entry.time = t + dt;
        entry.states = states;
        entry.moment = total_moment(scenario.limbs, states, scenario.human, entry.time);
        entry.activated = activated;
        entry.fallback = fallback;
        result.series.entries.push_back(std::move(entry));
    }

    RunSummary& summary = result.summary;
    summary.case_label = scenario.case_label;
    summary.fallback_count = fallback_count;
    double sum = 0.0;
    for (const TimeSeriesEntry& entry : result.series.entries) {
        sum += entry.moment.norm;
        if (entry.moment.norm > summary.max_norm) summary.max_norm = entry.moment.norm;
    }
    summary.mean_norm = sum / static_cast<double>(result.series.entries.size());
    summary.deviation = recheck_deviation(scenario, result.series, ref);
    return result;
}

ReductionReport compare_runs(const RunSummary& with_comp, const RunSummary& without_comp) {
    ReductionReport report;
    report.max_with = with_comp.max_norm;
    report.max_without = without_comp.max_norm;
    report.mean_with = with_comp.mean_norm;
    report.mean_without = without_comp.mean_norm;
    report.max_reduction = report.max_without - report.max_with;
    report.mean_reduction = report.mean_without - report.mean_with;
    report.max_reduction_pct =
        report.max_without == 0.0 ? 0.0 : 100.0 * report.max_reduction / report.max_without;
    report.mean_reduction_pct =
        report.mean_without == 0.0 ? 0.0 : 100.0 * report.mean_reduction / report.mean_without;
    return report;
}

}  // namespace srlplan
