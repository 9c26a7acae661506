#pragma once

#include <span>
#include <vector>

#include "srlplan/body_model.hpp"

namespace srlplan {

// Constant-acceleration motion segment: theta0/omega0 hold at t_start, alpha
// acts on [t_start, t_end) and is zero outside, the limb coasts past t_end.
struct ConstantAccelProfile {
    double theta0 = 0.0;  // rad
    double omega0 = 0.0;  // rad/s
    double alpha = 0.0;   // rad/s^2
    double t_start = 0.0;
    double t_end = 0.0;

    // Acceleration in effect over the step starting at t.
    double alpha_at(double t) const { return (t >= t_start && t < t_end) ? alpha : 0.0; }

    // Closed-form state at time t (acceleration field = alpha_at(t)).
    JointState eval(double t) const;
};

// The trajectories every limb would follow absent the planner: the
// disturbance limb runs its profile, all other limbs coast from their
// initial states. Deviation limits are measured against these.
struct ReferenceTrajectory {
    std::vector<int> limb_ids;
    std::vector<ConstantAccelProfile> profiles;
    int disturbance_limb_id = 0;

    // State of the given limb's reference at time t. Throws
    // std::invalid_argument for an unknown limb id.
    JointState eval(int limb_id, double t) const;

    // Underlying profile of one limb. Throws for an unknown limb id.
    const ConstantAccelProfile& profile(int limb_id) const;
};

// Max absolute angle deviation per limb over all logged steps.
struct DeviationReport {
    struct PerLimb {
        int limb_id = 0;
        double max_abs_deviation = 0.0;  // rad
    };
    std::vector<PerLimb> per_limb;
    bool violated = false;
};

// Exact kinematics over one step of constant angular acceleration.
// Throws std::invalid_argument for dt <= 0.
JointState integrate_constant_alpha(const JointState& state, double alpha, double dt);

// Rest-to-motion profile covering total_angle in the given duration with a
// single constant acceleration (2 * total_angle / duration^2). Throws
// std::invalid_argument for a non-positive duration.
ConstantAccelProfile disturbance_profile(double total_angle, double duration);

// Coast references for every limb plus the disturbance limb's profile.
ReferenceTrajectory make_reference_trajectory(std::span<const LimbModel> limbs,
                                              std::span<const JointState> initial_states,
                                              int disturbance_limb_id,
                                              const ConstantAccelProfile& disturbance);

// Unwrapped absolute angle difference. Trajectories in the bundled scenarios
// stay far from +-180 deg, so no modular wrap is applied.
double deviation(const JointState& actual, const JointState& reference);

}  // namespace srlplan
