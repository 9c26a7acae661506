#include "srlplan/dynamics.hpp"

#include <stdexcept>

namespace srlplan {

LimbMomentTerms limb_moment(const LimbModel& limb, const JointState& state,
                            const HumanModel& human) {
    const Vec3 arm = moment_arm(limb, state.angle, human);
    const Vec3 accel = limb_com_acceleration(limb, state);
    LimbMomentTerms terms;
    terms.limb_id = limb.id;
    terms.gravity_term = cross(arm, limb.mass * human.gravity);
    terms.motion_term = cross(arm, limb.mass * accel);
    return terms;
}

MomentSample total_moment(std::span<const LimbModel> limbs, std::span<const JointState> states,
                          const HumanModel& human, double time) {
    if (limbs.empty()) throw std::invalid_argument("total_moment: no limbs");
    if (limbs.size() != states.size())
        throw std::invalid_argument("total_moment: limbs and states differ in length");
    Vec3 sum{};
    for (std::size_t i = 0; i < limbs.size(); ++i) {
        const LimbMomentTerms terms = limb_moment(limbs[i], states[i], human);
        sum += terms.gravity_term;
        sum += terms.motion_term;
    }
    return MomentSample{time, sum, norm(sum)};
}

MomentBreakdown moment_breakdown(std::span<const LimbModel> limbs,
                                 std::span<const JointState> states, const HumanModel& human) {
    if (limbs.empty()) throw std::invalid_argument("moment_breakdown: no limbs");
    if (limbs.size() != states.size())
        throw std::invalid_argument("moment_breakdown: limbs and states differ in length");
    MomentBreakdown breakdown;
    breakdown.per_limb.reserve(limbs.size());
    for (std::size_t i = 0; i < limbs.size(); ++i)
        breakdown.per_limb.push_back(limb_moment(limbs[i], states[i], human));
    return breakdown;
}

}  // namespace srlplan
