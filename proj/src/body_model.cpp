#include "srlplan/body_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace srlplan {

namespace {

constexpr double kUnitTol = 1e-9;

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace

void validate(const HumanModel& human) {
    if (!(human.body_mass > 0.0)) fail("HumanModel: body_mass must be > 0");
    if (!(human.thumb_tip_reach > 0.0)) fail("HumanModel: thumb_tip_reach must be > 0");
    if (!is_finite(human.reference_point)) fail("HumanModel: reference_point must be finite");
    const double g = norm(human.gravity);
    if (!(g >= 9.0 && g <= 10.5)) fail("HumanModel: |gravity| must lie in [9.0, 10.5] m/s^2");
}

void validate(const LimbModel& limb) {
    const std::string tag = "LimbModel #" + std::to_string(limb.id) + ": ";
    if (limb.id < 1) fail(tag + "id must be >= 1");
    if (!is_finite(limb.mount_point)) fail(tag + "mount_point must be finite");
    if (std::abs(norm(limb.rotation_axis) - 1.0) > kUnitTol)
        fail(tag + "rotation_axis must be a unit vector");
    if (std::abs(norm(limb.zero_direction) - 1.0) > kUnitTol)
        fail(tag + "zero_direction must be a unit vector");
    if (std::abs(dot(limb.rotation_axis, limb.zero_direction)) > kUnitTol)
        fail(tag + "zero_direction must be perpendicular to rotation_axis");
    if (!(limb.length > 0.0)) fail(tag + "length must be > 0");
    if (!(limb.mass > 0.0)) fail(tag + "mass must be > 0");
}

void validate(const JointState& state) {
    if (!std::isfinite(state.angle) || !std::isfinite(state.velocity) ||
        !std::isfinite(state.acceleration))
        fail("JointState: all fields must be finite");
}

Vec3 limb_com_position(const LimbModel& limb, double angle) {
    // Rodrigues rotation of the zero-direction link about the axis.
    const Vec3& k = limb.rotation_axis;
    const Vec3& u = limb.zero_direction;
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const Vec3 rotated = c * u + s * cross(k, u) + ((1.0 - c) * dot(k, u)) * k;
    return limb.mount_point + limb.length * rotated;
}

Vec3 limb_com_acceleration(const LimbModel& limb, const JointState& state) {
    const Vec3 rho = limb_com_position(limb, state.angle) - limb.mount_point;
    const Vec3 omega = state.velocity * limb.rotation_axis;
    const Vec3 alpha = state.acceleration * limb.rotation_axis;
    return cross(alpha, rho) + cross(omega, cross(omega, rho));
}

Vec3 moment_arm(const LimbModel& limb, double angle, const HumanModel& human) {
    return limb_com_position(limb, angle) - human.reference_point;
}

}  // namespace srlplan
