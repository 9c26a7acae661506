#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <vector>

#include "srlplan/rng.hpp"
#include "srlplan/trajectory.hpp"
#include "srlplan/units.hpp"

using namespace srlplan;

namespace {

LimbModel forward_limb(int id, Vec3 mount) {
    LimbModel limb;
    limb.id = id;
    limb.mount_point = mount;
    limb.rotation_axis = {0, 0, 1};
    limb.zero_direction = {1, 0, 0};
    limb.length = 0.8;
    limb.mass = 8.0;
    return limb;
}

}  // namespace

TEST_CASE("integrate_constant_alpha: closed form") {
    const JointState rest{0, 0, 0};
    const JointState still = integrate_constant_alpha(rest, 0.0, 1.0);
    CHECK(still.angle == 0.0);
    CHECK(still.velocity == 0.0);

    // 28.8 deg/s^2 for 2.5 s from rest: 90 deg, 72 deg/s
    const JointState swept = integrate_constant_alpha(rest, deg_to_rad(28.8), 2.5);
    CHECK(rad_to_deg(swept.angle) == doctest::Approx(90.0).epsilon(1e-12));
    CHECK(rad_to_deg(swept.velocity) == doctest::Approx(72.0).epsilon(1e-12));

    // coast from (40 deg, 10 deg/s) for 2 s
    const JointState coasted =
        integrate_constant_alpha({deg_to_rad(40.0), deg_to_rad(10.0), 0.0}, 0.0, 2.0);
    CHECK(rad_to_deg(coasted.angle) == doctest::Approx(60.0).epsilon(1e-12));
    CHECK(rad_to_deg(coasted.velocity) == doctest::Approx(10.0).epsilon(1e-12));

    CHECK_THROWS_AS(integrate_constant_alpha(rest, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(integrate_constant_alpha(rest, 1.0, -0.1), std::invalid_argument);
}

TEST_CASE("integrate_constant_alpha: two half-steps equal one full step") {
    Xoshiro256pp rng(21);
    for (int i = 0; i < 200; ++i) {
        const JointState start{rng.next_in(-2, 2), rng.next_in(-1, 1), 0.0};
        const double alpha = rng.next_in(-0.5, 0.5);
        const double dt = rng.next_in(1e-3, 0.5);
        const JointState full = integrate_constant_alpha(start, alpha, dt);
        const JointState half = integrate_constant_alpha(start, alpha, dt / 2);
        const JointState two = integrate_constant_alpha(half, alpha, dt / 2);
        CHECK(std::abs(two.angle - full.angle) <= 1e-12);
        CHECK(std::abs(two.velocity - full.velocity) <= 1e-12);
    }
}

TEST_CASE("disturbance_profile: 0 to 90 deg in 2.5 s") {
    const ConstantAccelProfile profile = disturbance_profile(deg_to_rad(90.0), 2.5);
    CHECK(rad_to_deg(profile.alpha) == doctest::Approx(28.8).epsilon(1e-12));
    CHECK(profile.theta0 == 0.0);
    CHECK(profile.omega0 == 0.0);
    CHECK(profile.t_end == 2.5);

    // endpoint is hit exactly
    CHECK(rad_to_deg(profile.eval(2.5).angle) == doctest::Approx(90.0).epsilon(1e-12));

    const ConstantAccelProfile flat = disturbance_profile(0.0, 2.5);
    CHECK(flat.alpha == 0.0);

    CHECK_THROWS_AS(disturbance_profile(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(disturbance_profile(1.0, -2.5), std::invalid_argument);
}

TEST_CASE("disturbance_profile: monotone nondecreasing angle on the sweep") {
    const ConstantAccelProfile profile = disturbance_profile(deg_to_rad(90.0), 2.5);
    double prev = -1.0;
    for (int i = 0; i <= 250; ++i) {
        const double angle = profile.eval(i * 0.01).angle;
        CHECK(angle >= prev);
        prev = angle;
    }
}

TEST_CASE("reference trajectory: coast states and the disturbance profile") {
    // Case-2-style initial states on limbs 1, 3, 4; limb 2 runs the sweep.
    const std::vector<LimbModel> limbs{forward_limb(1, {0, 0.25, 0.25}),
                                       forward_limb(2, {0, -0.25, 0.25}),
                                       forward_limb(3, {0, 0.25, -0.25}),
                                       forward_limb(4, {0, -0.25, -0.25})};
    const std::vector<JointState> initial{{deg_to_rad(40), deg_to_rad(10), 0},
                                          {0, 0, 0},
                                          {deg_to_rad(-70), deg_to_rad(-10), 0},
                                          {deg_to_rad(-20), deg_to_rad(20), 0}};
    const ReferenceTrajectory ref = make_reference_trajectory(
        limbs, initial, 2, disturbance_profile(deg_to_rad(90.0), 2.5));

    // t=0 reproduces the initial states through the degree round-trip
    CHECK(std::abs(rad_to_deg(ref.eval(1, 0.0).angle) - 40.0) <= 1e-12);
    CHECK(std::abs(rad_to_deg(ref.eval(3, 0.0).angle) - (-70.0)) <= 1e-12);
    CHECK(std::abs(rad_to_deg(ref.eval(4, 0.0).angle) - (-20.0)) <= 1e-12);
    CHECK(std::abs(rad_to_deg(ref.eval(1, 0.0).velocity) - 10.0) <= 1e-12);

    // limb 3 after one second of coasting
    const JointState limb3 = ref.eval(3, 1.0);
    CHECK(rad_to_deg(limb3.angle) == doctest::Approx(-80.0).epsilon(1e-12));
    CHECK(rad_to_deg(limb3.velocity) == doctest::Approx(-10.0).epsilon(1e-12));

    // the disturbance limb a quarter of the way in time
    CHECK(rad_to_deg(ref.eval(2, 1.25).angle) == doctest::Approx(22.5).epsilon(1e-12));

    CHECK_THROWS_AS(ref.eval(9, 0.0), std::invalid_argument);
}

TEST_CASE("make_reference_trajectory: input validation") {
    const std::vector<LimbModel> limbs{forward_limb(1, {0, 0.25, 0.25}),
                                       forward_limb(2, {0, -0.25, 0.25})};
    const std::vector<JointState> initial{{0, 0, 0}, {0, 0, 0}};
    const ConstantAccelProfile sweep = disturbance_profile(deg_to_rad(90.0), 2.5);
    CHECK_THROWS_AS(make_reference_trajectory(limbs, initial, 7, sweep),
                    std::invalid_argument);
    const std::vector<JointState> short_initial{{0, 0, 0}};
    CHECK_THROWS_AS(make_reference_trajectory(limbs, short_initial, 2, sweep),
                    std::invalid_argument);
}

TEST_CASE("deviation: unwrapped absolute angle difference") {
    CHECK(rad_to_deg(deviation({deg_to_rad(10), 0, 0}, {0, 0, 0})) ==
          doctest::Approx(10.0).epsilon(1e-12));
    // the +-20 deg boundary counts as feasible; deviation just reports 20
    CHECK(rad_to_deg(deviation({deg_to_rad(-90), 0, 0}, {deg_to_rad(-70), 0, 0})) ==
          doctest::Approx(20.0).epsilon(1e-12));
    CHECK(rad_to_deg(deviation({deg_to_rad(25), 0, 0}, {0, 0, 0})) ==
          doctest::Approx(25.0).epsilon(1e-12));
}
