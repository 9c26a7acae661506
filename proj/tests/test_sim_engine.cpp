#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <vector>

#include "srlplan/scenario_io.hpp"
#include "srlplan/sim_engine.hpp"
#include "srlplan/units.hpp"

using namespace srlplan;

namespace {

Scenario case1_scenario(bool compensation) {
    Scenario scenario;
    scenario.case_label = compensation ? "1-1" : "1-2";
    scenario.limbs = default_limb_set(scenario.human);
    scenario.initial_states.assign(4, JointState{});
    scenario.disturbance_limb_id = 2;
    scenario.disturbance = disturbance_profile(deg_to_rad(90.0), 2.5);
    scenario.compensation_enabled = compensation;
    scenario.duration = 2.5;
    return scenario;
}

bool states_equal(const std::vector<JointState>& a, const std::vector<JointState>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].angle != b[i].angle || a[i].velocity != b[i].velocity ||
            a[i].acceleration != b[i].acceleration)
            return false;
    return true;
}

}  // namespace

TEST_CASE("run_scenario: one step produces two entries") {
    Scenario scenario = case1_scenario(false);
    scenario.duration = 0.01;
    const RunResult result = run_scenario(scenario);
    REQUIRE(result.series.entries.size() == 2);
    CHECK(result.series.entries[0].time == 0.0);
    CHECK(result.series.entries[1].time == doctest::Approx(0.01).epsilon(1e-12));
}

TEST_CASE("run_scenario: fractional step counts round up") {
    Scenario scenario = case1_scenario(false);
    scenario.duration = 0.025;
    const RunResult result = run_scenario(scenario);
    // ceil(0.025 / 0.01) = 3 steps -> 4 entries
    REQUIRE(result.series.entries.size() == 4);
}

TEST_CASE("run_scenario: uncompensated baseline starts at the static gravity moment") {
    const Scenario scenario = case1_scenario(false);
    const RunResult result = run_scenario(scenario);

    // closed-form static moment of the initial configuration
    Vec3 expected{};
    for (std::size_t i = 0; i < scenario.limbs.size(); ++i) {
        const Vec3 arm = moment_arm(scenario.limbs[i], scenario.initial_states[i].angle,
                                    scenario.human);
        expected += cross(arm, scenario.limbs[i].mass * scenario.human.gravity);
    }
    CHECK(std::abs(result.series.entries.front().moment.norm - norm(expected)) <= 1e-9);

    // the default layout is balanced at rest, and the sweep unbalances it
    CHECK(norm(expected) <= 1e-9);
    CHECK(result.series.entries.back().moment.norm > 50.0);
    CHECK(result.summary.max_norm > result.series.entries.front().moment.norm);
}

TEST_CASE("run_scenario: uncompensated run leaves compensating limbs at rest") {
    const Scenario scenario = case1_scenario(false);
    const RunResult result = run_scenario(scenario);
    for (const TimeSeriesEntry& entry : result.series.entries) {
        CHECK(entry.states[0].angle == 0.0);  // limb 1
        CHECK(entry.states[2].angle == 0.0);  // limb 3
        CHECK(entry.states[3].angle == 0.0);  // limb 4
        CHECK_FALSE(entry.activated);
        CHECK_FALSE(entry.fallback);
    }
    CHECK(result.summary.fallback_count == 0);
}

TEST_CASE("run_scenario: disturbance limb follows the closed-form profile") {
    const Scenario scenario = case1_scenario(false);
    const RunResult result = run_scenario(scenario);
    for (const TimeSeriesEntry& entry : result.series.entries) {
        const double expected = scenario.disturbance.eval(entry.time).angle;
        CHECK(std::abs(entry.states[1].angle - expected) <= 1e-12);
    }
    const TimeSeriesEntry& last = result.series.entries.back();
    CHECK(std::abs(rad_to_deg(last.states[1].angle) - 90.0) <= 1e-9);
}

TEST_CASE("run_scenario: uncompensated output ignores the seed") {
    Scenario a = case1_scenario(false);
    a.planner.seed = 1;
    Scenario b = case1_scenario(false);
    b.planner.seed = 987654321;
    const RunResult ra = run_scenario(a);
    const RunResult rb = run_scenario(b);
    REQUIRE(ra.series.entries.size() == rb.series.entries.size());
    for (std::size_t i = 0; i < ra.series.entries.size(); ++i)
        CHECK(states_equal(ra.series.entries[i].states, rb.series.entries[i].states));
}

TEST_CASE("run_scenario: compensated replay is bit-identical and respects the band") {
    Scenario scenario = case1_scenario(true);
    scenario.planner.iterations = 400;  // keep the unit suite quick
    scenario.planner.seed = 42;
    const RunResult first = run_scenario(scenario);
    const RunResult second = run_scenario(scenario);
    REQUIRE(first.series.entries.size() == second.series.entries.size());
    for (std::size_t i = 0; i < first.series.entries.size(); ++i) {
        CHECK(states_equal(first.series.entries[i].states, second.series.entries[i].states));
        CHECK(first.series.entries[i].moment.norm == second.series.entries[i].moment.norm);
    }

    // independent post-hoc deviation recheck against the references
    const ReferenceTrajectory ref = make_reference_trajectory(
        scenario.limbs, scenario.initial_states, scenario.disturbance_limb_id,
        scenario.disturbance);
    for (const TimeSeriesEntry& entry : first.series.entries)
        for (std::size_t i = 0; i < scenario.limbs.size(); ++i) {
            const double dev =
                deviation(entry.states[i], ref.eval(scenario.limbs[i].id, entry.time));
            CHECK(dev <= scenario.planner.deviation_limit + 1e-9);
        }
    CHECK_FALSE(first.summary.deviation.violated);

    // max/mean invariants on the summary
    CHECK(first.summary.max_norm >= first.summary.mean_norm);
    CHECK(first.summary.mean_norm >= 0.0);
}

TEST_CASE("run_scenario: scenario invariants rejected before stepping") {
    Scenario bad_duration = case1_scenario(false);
    bad_duration.duration = 0.0;
    CHECK_THROWS_AS(run_scenario(bad_duration), std::invalid_argument);

    Scenario bad_initial = case1_scenario(false);
    bad_initial.initial_states[1].angle = deg_to_rad(5.0);  // disturbance limb off its profile
    CHECK_THROWS_AS(run_scenario(bad_initial), std::invalid_argument);

    Scenario missing_limb = case1_scenario(false);
    missing_limb.disturbance_limb_id = 9;
    CHECK_THROWS_AS(run_scenario(missing_limb), std::invalid_argument);

    Scenario dup_ids = case1_scenario(false);
    dup_ids.limbs[1].id = 1;
    CHECK_THROWS_AS(run_scenario(dup_ids), std::invalid_argument);

    Scenario moving_start = case1_scenario(false);
    moving_start.initial_states[0].acceleration = 1.0;
    CHECK_THROWS_AS(run_scenario(moving_start), std::invalid_argument);
}

TEST_CASE("run_scenario: grid oracle mode replaces the random search") {
    Scenario scenario = case1_scenario(true);
    scenario.oracle_grid_points = 3;
    const RunResult a = run_scenario(scenario);
    const RunResult b = run_scenario(scenario);
    REQUIRE(a.series.entries.size() == b.series.entries.size());
    for (std::size_t i = 0; i < a.series.entries.size(); ++i)
        CHECK(states_equal(a.series.entries[i].states, b.series.entries[i].states));
    CHECK_FALSE(a.summary.deviation.violated);

    // seeds are irrelevant to the exhaustive search
    Scenario reseeded = scenario;
    reseeded.planner.seed = 999;
    const RunResult c = run_scenario(reseeded);
    for (std::size_t i = 0; i < a.series.entries.size(); ++i)
        CHECK(states_equal(a.series.entries[i].states, c.series.entries[i].states));
    // grid alphas land on the 3-point lattice
    CHECK(a.series.entries.back().activated);
}

TEST_CASE("run_scenario: a vanishing deviation limit disables compensation in effect") {
    Scenario pinned = case1_scenario(true);
    pinned.planner.deviation_limit = deg_to_rad(1e-9);
    pinned.planner.iterations = 200;
    const RunResult with = run_scenario(pinned);

    Scenario coast = pinned;
    coast.compensation_enabled = false;
    const RunResult without = run_scenario(coast);

    // every activated step falls back, so the trajectories coincide
    CHECK(with.summary.fallback_count == 250);
    REQUIRE(with.series.entries.size() == without.series.entries.size());
    for (std::size_t i = 0; i < with.series.entries.size(); ++i)
        CHECK(states_equal(with.series.entries[i].states, without.series.entries[i].states));
    const ReductionReport report = compare_runs(with.summary, without.summary);
    CHECK(report.mean_reduction == 0.0);
    CHECK(report.max_reduction == 0.0);
}

TEST_CASE("compare_runs: reductions and the zero guard") {
    RunSummary with;
    RunSummary without;
    with.max_norm = 80.0;
    with.mean_norm = 40.0;
    without.max_norm = 100.0;
    without.mean_norm = 50.0;
    const ReductionReport report = compare_runs(with, without);
    CHECK(report.max_reduction == doctest::Approx(20.0));
    CHECK(report.max_reduction_pct == doctest::Approx(20.0));
    CHECK(report.mean_reduction == doctest::Approx(10.0));
    CHECK(report.mean_reduction_pct == doctest::Approx(20.0));

    const ReductionReport same = compare_runs(with, with);
    CHECK(same.max_reduction == 0.0);
    CHECK(same.mean_reduction_pct == 0.0);

    RunSummary zero;
    const ReductionReport guarded = compare_runs(zero, zero);
    CHECK(guarded.max_reduction_pct == 0.0);
    CHECK(guarded.mean_reduction_pct == 0.0);
}
