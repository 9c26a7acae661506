#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "srlplan/dynamics.hpp"
#include "srlplan/rng.hpp"
#include "srlplan/trajectory.hpp"
#include "srlplan/units.hpp"

namespace srlplan {

struct PlannerConfig {
    double alpha_max = deg_to_rad(20.0);        // rad/s^2, sampling bound
    double deviation_limit = deg_to_rad(20.0);  // rad, vs the reference trajectory
    int iterations = 3000;                      // candidates per control loop
    double control_dt = 0.01;                   // s
    // Candidate look-ahead, in control steps. Long enough (0.5 s at the
    // default control period) that a candidate's displacement shows up in
    // its cost; with a one-step window the gravity-term consequences of
    // moving a limb are invisible and the search burns the deviation budget
    // on transient gains.
    int horizon_steps = 50;
    double activation_threshold = 0.0;          // N*m of predicted norm increase
    std::uint64_t seed = 42;
};

// Throws std::invalid_argument when a field violates its range.
void validate(const PlannerConfig& config);

// One sampled vector of compensating-limb accelerations, constant over the
// control period, with its feasibility verdict and predicted cost. cost is
// meaningless when feasible is false.
struct CandidatePlan {
    std::vector<double> alphas;  // rad/s^2, compensating limbs in ascending id order
    double cost = std::numeric_limits<double>::quiet_NaN();  // N*m
    bool feasible = false;
};

struct PlanDecision {
    CandidatePlan chosen;
    bool activated = false;
    int n_feasible = 0;
    bool fallback = false;
};

// True when the disturbance limb's motion raises the one-step-ahead moment
// norm above what it would be with that limb unaccelerated, by more than the
// threshold; also true while a compensating limb is off its reference and
// must stay managed until it returns.
bool should_activate(std::span<const JointState> current_states,
                     std::span<const LimbModel> limbs, const HumanModel& human,
                     const ReferenceTrajectory& ref, double t, const PlannerConfig& config);

// One candidate: each component uniform in [-alpha_max, alpha_max), exactly
// n_comp_limbs draws in ascending limb-id order.
std::vector<double> sample_candidate(Xoshiro256pp& rng, int n_comp_limbs, double alpha_max);

// Disturbance-limb states at the next horizon_steps control-step endpoints,
// advanced with the profile acceleration sampled at each step start. This is
// the same integration path the simulation engine applies, so a candidate's
// predicted states match the executed ones bit for bit.
std::vector<JointState> propagate_disturbance(std::span<const JointState> current_states,
                                              std::span<const LimbModel> limbs,
                                              const ReferenceTrajectory& ref, double t,
                                              const PlannerConfig& config);

// Score one acceleration vector: simulate the compensating limbs forward over
// the horizon (the disturbance limb follows disturbance_next), mark the plan
// infeasible if any substep deviates from the reference by more than the
// limit or if the horizon-end velocity could no longer be braked to a stop
// inside the band, otherwise cost = mean moment norm over the substep
// endpoints.
CandidatePlan evaluate_candidate(std::span<const double> alphas,
                                 std::span<const JointState> current_states,
                                 std::span<const JointState> disturbance_next,
                                 std::span<const LimbModel> limbs, const HumanModel& human,
                                 const ReferenceTrajectory& ref, double t,
                                 const PlannerConfig& config);

// One control loop of the random-search planner: if activated, draw
// config.iterations candidates from rng (serially, before any evaluation),
// score each, and keep the feasible one with the lowest cost (ties go to the
// lowest draw index). Falls back to zero accelerations when nothing is
// feasible. The caller positions rng deterministically for the step index.
// When debug_evaluated is non-null every evaluated candidate is appended.
PlanDecision plan_step(Xoshiro256pp& rng, std::span<const JointState> current_states,
                       std::span<const LimbModel> limbs, const HumanModel& human,
                       const ReferenceTrajectory& ref, double t, const PlannerConfig& config,
                       std::vector<CandidatePlan>* debug_evaluated = nullptr);

// Validation oracle: exhaustively evaluate a uniform grid with
// grid_points_per_limb points on [-alpha_max, alpha_max] per compensating
// limb (endpoints included; the first limb varies slowest) and return the
// feasible grid minimum under the same activation gate and tie-break rule.
// Throws std::invalid_argument for grid_points_per_limb < 2 or a total grid
// larger than 1e7 candidates.
PlanDecision grid_search_step(std::span<const JointState> current_states,
                              std::span<const LimbModel> limbs, const HumanModel& human,
                              const ReferenceTrajectory& ref, double t,
                              const PlannerConfig& config, int grid_points_per_limb);

}  // namespace srlplan
