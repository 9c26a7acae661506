#pragma once

#include <span>
#include <vector>

#include "srlplan/body_model.hpp"
#include "srlplan/vec3.hpp"

namespace srlplan {

// Moment about the reference point at one instant, with its Euclidean norm.
struct MomentSample {
    double time = 0.0;  // s
    Vec3 moment{};      // N*m
    double norm = 0.0;  // N*m
};

// Gravity and motion contributions of a single limb: r x (m*g) and r x (m*a).
struct LimbMomentTerms {
    int limb_id = 0;
    Vec3 gravity_term{};  // N*m
    Vec3 motion_term{};   // N*m
};

struct MomentBreakdown {
    std::vector<LimbMomentTerms> per_limb;
};

// Per-limb contribution to the moment about the reference point.
LimbMomentTerms limb_moment(const LimbModel& limb, const JointState& state,
                            const HumanModel& human);

// Sum of all limbs' gravity and motion terms. Throws std::invalid_argument
// when limbs and states differ in length or the system is empty.
MomentSample total_moment(std::span<const LimbModel> limbs, std::span<const JointState> states,
                          const HumanModel& human, double time);

// Same sum, kept per limb. The terms add up to total_moment's vector.
MomentBreakdown moment_breakdown(std::span<const LimbModel> limbs,
                                 std::span<const JointState> states, const HumanModel& human);

}  // namespace srlplan
