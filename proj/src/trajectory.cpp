#include "srlplan/trajectory.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace srlplan {

JointState ConstantAccelProfile::eval(double t) const {
    JointState s{theta0, omega0, 0.0};
    if (t <= t_start) {
        const double tau = t - t_start;
        s.angle = theta0 + omega0 * tau;
        s.acceleration = (t == t_start) ? alpha_at(t) : 0.0;
        return s;
    }
    const double tau = std::min(t, t_end) - t_start;
    s.angle = theta0 + omega0 * tau + 0.5 * alpha * tau * tau;
    s.velocity = omega0 + alpha * tau;
    if (t > t_end) {
        s.angle += s.velocity * (t - t_end);
        s.acceleration = 0.0;
    } else {
        s.acceleration = alpha_at(t);
    }
    return s;
}

JointState ReferenceTrajectory::eval(int limb_id, double t) const {
    return profile(limb_id).eval(t);
}

const ConstantAccelProfile& ReferenceTrajectory::profile(int limb_id) const {
    for (std::size_t i = 0; i < limb_ids.size(); ++i) {
        if (limb_ids[i] == limb_id) return profiles[i];
    }
    throw std::invalid_argument("ReferenceTrajectory: unknown limb id " + std::to_string(limb_id));
}

JointState integrate_constant_alpha(const JointState& state, double alpha, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("integrate_constant_alpha: dt must be > 0");
    JointState next;
    next.angle = state.angle + state.velocity * dt + 0.5 * alpha * dt * dt;
    next.velocity = state.velocity + alpha * dt;
    next.acceleration = alpha;
    return next;
}

ConstantAccelProfile disturbance_profile(double total_angle, double duration) {
    if (!(duration > 0.0))
        throw std::invalid_argument("disturbance_profile: duration must be > 0");
    ConstantAccelProfile profile;
    profile.theta0 = 0.0;
    profile.omega0 = 0.0;
    profile.alpha = 2.0 * total_angle / (duration * duration);
    profile.t_start = 0.0;
    profile.t_end = duration;
    return profile;
}

ReferenceTrajectory make_reference_trajectory(std::span<const LimbModel> limbs,
                                              std::span<const JointState> initial_states,
                                              int disturbance_limb_id,
                                              const ConstantAccelProfile& disturbance) {
    if (limbs.size() != initial_states.size())
        throw std::invalid_argument("make_reference_trajectory: limbs/states length mismatch");
    ReferenceTrajectory ref;
    ref.disturbance_limb_id = disturbance_limb_id;
    ref.limb_ids.reserve(limbs.size());
    ref.profiles.reserve(limbs.size());
    bool found = false;
    for (std::size_t i = 0; i < limbs.size(); ++i) {
        ref.limb_ids.push_back(limbs[i].id);
        if (limbs[i].id == disturbance_limb_id) {
            ref.profiles.push_back(disturbance);
            found = true;
        } else {
            ConstantAccelProfile coast;
            coast.theta0 = initial_states[i].angle;
            coast.omega0 = initial_states[i].velocity;
            coast.alpha = 0.0;
            coast.t_start = 0.0;
            coast.t_end = std::numeric_limits<double>::infinity();
            ref.profiles.push_back(coast);
        }
    }
    if (!found)
        throw std::invalid_argument("make_reference_trajectory: disturbance limb id " +
                                    std::to_string(disturbance_limb_id) + " not present");
    return ref;
}

double deviation(const JointState& actual, const JointState& reference) {
    return std::abs(actual.angle - reference.angle);
}

}  // namespace srlplan
