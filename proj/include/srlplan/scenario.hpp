#pragma once

#include <string>
#include <vector>

#include "srlplan/body_model.hpp"
#include "srlplan/planner.hpp"
#include "srlplan/trajectory.hpp"

namespace srlplan {

// Fully resolved simulation case: all angles in radians, all masses in kg.
// Limbs are kept in ascending id order; initial states line up with limbs
// and carry zero initial acceleration.
struct Scenario {
    std::string case_label = "unnamed";
    HumanModel human;
    std::vector<LimbModel> limbs;
    int disturbance_limb_id = 0;
    ConstantAccelProfile disturbance;
    std::vector<JointState> initial_states;
    PlannerConfig planner;
    bool compensation_enabled = true;
    double duration = 0.0;  // s

    // 0 runs the random-search planner; >= 2 replaces it with the
    // exhaustive grid oracle of that many points per limb.
    int oracle_grid_points = 0;
};

// Throws std::invalid_argument when any model invariant fails, ids are not
// ascending and unique, the disturbance limb is missing, or the disturbance
// limb's initial state disagrees with its profile at t=0.
void validate(const Scenario& scenario);

}  // namespace srlplan
