#pragma once

#include "srlplan/units.hpp"
#include "srlplan/vec3.hpp"

namespace srlplan {

// Anthropometric parameters of the wearer plus the frame conventions used
// throughout: x forward, y left, z up, origin at the moment reference point
// (center of the T10 vertebra), so reference_point defaults to the origin.
struct HumanModel {
    double body_mass = 80.0;        // kg
    double thumb_tip_reach = 0.80;  // m
    Vec3 reference_point{};         // m, body frame
    Vec3 gravity{0.0, 0.0, -kStandardGravity};  // m/s^2, body frame
};

// One robotic limb: a point mass at the tip of a rigid link of the given
// length, rotating about a fixed axis anchored at mount_point. zero_direction
// is the link direction at angle 0 and must be perpendicular to the axis.
struct LimbModel {
    int id = 0;             // 1..n
    Vec3 mount_point{};     // m, body frame
    Vec3 rotation_axis{0.0, 0.0, 1.0};   // unit vector
    Vec3 zero_direction{1.0, 0.0, 0.0};  // unit vector, perpendicular to rotation_axis
    double length = 0.0;    // m
    double mass = 0.0;      // kg
};

// Scalar joint state of a 1-DOF limb at one instant.
struct JointState {
    double angle = 0.0;         // rad
    double velocity = 0.0;      // rad/s
    double acceleration = 0.0;  // rad/s^2
};

// Throw std::invalid_argument when a model violates its invariants
// (unit/orthogonal limb frame vectors, positive masses and lengths,
// plausible gravity magnitude).
void validate(const HumanModel& human);
void validate(const LimbModel& limb);
void validate(const JointState& state);

// Position of the limb's point mass in the body frame: the zero-direction
// link rotated by `angle` about the rotation axis (Rodrigues rotation),
// offset from the mount point.
Vec3 limb_com_position(const LimbModel& limb, double angle);

// COM acceleration in the body frame for a limb rotating about its fixed
// axis: alpha x rho + omega x (omega x rho), with rho the mount-to-COM vector.
Vec3 limb_com_acceleration(const LimbModel& limb, const JointState& state);

// Vector from the moment reference point to the limb's COM.
Vec3 moment_arm(const LimbModel& limb, double angle, const HumanModel& human);

}  // namespace srlplan
