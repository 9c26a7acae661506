#include "srlplan/scenario.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace srlplan {

void validate(const Scenario& scenario) {
    validate(scenario.human);
    if (scenario.limbs.size() < 2)
        throw std::invalid_argument(
            "Scenario: need at least two limbs (one disturbance, one compensating)");
    int prev_id = 0;
    for (const LimbModel& limb : scenario.limbs) {
        validate(limb);
        if (limb.id <= prev_id)
            throw std::invalid_argument("Scenario: limb ids must be unique and ascending");
        prev_id = limb.id;
    }
    if (scenario.initial_states.size() != scenario.limbs.size())
        throw std::invalid_argument("Scenario: one initial state per limb");
    bool found = false;
    for (std::size_t i = 0; i < scenario.limbs.size(); ++i) {
        const JointState& state = scenario.initial_states[i];
        validate(state);
        if (state.acceleration != 0.0)
            throw std::invalid_argument("Scenario: initial accelerations must be zero");
        if (scenario.limbs[i].id == scenario.disturbance_limb_id) {
            found = true;
            const JointState at_start = scenario.disturbance.eval(0.0);
            if (std::abs(state.angle - at_start.angle) > 1e-12 ||
                std::abs(state.velocity - at_start.velocity) > 1e-12)
                throw std::invalid_argument(
                    "Scenario: disturbance limb's initial state must match its profile at t=0");
        }
    }
    if (!found)
        throw std::invalid_argument("Scenario: disturbance_limb_id " +
                                    std::to_string(scenario.disturbance_limb_id) +
                                    " not among the limbs");
    if (!(scenario.disturbance.t_end > scenario.disturbance.t_start))
        throw std::invalid_argument("Scenario: disturbance profile needs t_end > t_start");
    validate(scenario.planner);
    if (!(scenario.duration > 0.0)) throw std::invalid_argument("Scenario: duration must be > 0");
    if (scenario.oracle_grid_points != 0 && scenario.oracle_grid_points < 2)
        throw std::invalid_argument("Scenario: oracle_grid_points must be 0 or >= 2");
}

}  // namespace srlplan
