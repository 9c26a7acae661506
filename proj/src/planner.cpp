#include "srlplan/planner.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace srlplan {

namespace {

void check_system(std::span<const JointState> states, std::span<const LimbModel> limbs) {
    if (limbs.size() < 2)
        throw std::invalid_argument("planner: need a disturbance limb and at least one other");
    if (states.size() != limbs.size())
        throw std::invalid_argument("planner: states and limbs differ in length");
}

std::size_t disturbance_index(std::span<const LimbModel> limbs, const ReferenceTrajectory& ref) {
    for (std::size_t i = 0; i < limbs.size(); ++i)
        if (limbs[i].id == ref.disturbance_limb_id) return i;
    throw std::invalid_argument("planner: disturbance limb not present in the limb set");
}

// Fraction of alpha_max assumed available for braking in the
// stopping-position feasibility check. The reserve keeps a band of sampled
// candidates feasible near the deviation boundary, so the planner
// decelerates early instead of falling back and coasting across it.
constexpr double kBrakeReserve = 0.8;

// Constant-per-loop tables for one compensating limb. With the link
// direction written as cos(theta)*u0 + sin(theta)*w0 (w0 = axis x u0), every
// moment term becomes a linear combination of precomputed vectors, so the
// candidate loop needs no trigonometry and no per-substep model lookups.
struct CompTables {
    Vec3 arm_offset;    // mount - reference point
    Vec3 u;             // length * zero_direction
    Vec3 w;             // length * (axis x zero_direction)
    Vec3 mu;            // mass * u
    Vec3 mw;            // mass * w
    Vec3 arm_cross_mg;  // arm_offset x (mass * gravity)
    Vec3 u_cross_mg;
    Vec3 w_cross_mg;
    double cos0 = 1.0;  // at the loop's current angle
    double sin0 = 0.0;
};

// Per-control-loop tables shared by every candidate evaluation: the
// disturbance limb's moment contribution per substep and the reference
// states of each compensating limb at each substep endpoint.
struct StepContext {
    std::span<const JointState> current;
    std::span<const LimbModel> limbs;
    const PlannerConfig* config = nullptr;
    double t = 0.0;
    std::size_t dist_index = 0;
    std::vector<std::size_t> comp_index;     // limb indices of compensating limbs, id order
    std::vector<Vec3> dist_contrib;          // disturbance moment terms per substep
    std::vector<double> ref_angles;          // [j * horizon_steps + (k-1)]
    std::vector<double> ref_end_velocity;    // per compensating limb, at the horizon end
    std::vector<CompTables> tables;          // per compensating limb

    // scratch for the (serial) candidate loop
    mutable std::vector<double> theta, omega, cos_t, sin_t, half_a_dt2, alpha_dt;

    std::size_t n_comp() const { return comp_index.size(); }
};

StepContext make_context(std::span<const JointState> current, std::span<const LimbModel> limbs,
                         const HumanModel& human, const ReferenceTrajectory& ref, double t,
                         const PlannerConfig& config,
                         std::span<const JointState> dist_horizon) {
    StepContext ctx;
    ctx.current = current;
    ctx.limbs = limbs;
    ctx.config = &config;
    ctx.t = t;
    ctx.dist_index = disturbance_index(limbs, ref);
    ctx.comp_index.reserve(limbs.size() - 1);
    for (std::size_t i = 0; i < limbs.size(); ++i)
        if (i != ctx.dist_index) ctx.comp_index.push_back(i);

    ctx.dist_contrib.reserve(dist_horizon.size());
    for (const JointState& state : dist_horizon) {
        const LimbMomentTerms terms = limb_moment(limbs[ctx.dist_index], state, human);
        ctx.dist_contrib.push_back(terms.gravity_term + terms.motion_term);
    }

    const int horizon = config.horizon_steps;
    const std::size_t n = ctx.comp_index.size();
    ctx.ref_angles.resize(n * static_cast<std::size_t>(horizon));
    ctx.ref_end_velocity.resize(n);
    ctx.tables.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const LimbModel& limb = limbs[ctx.comp_index[j]];
        for (int k = 1; k <= horizon; ++k) {
            const double tk = t + k * config.control_dt;
            const JointState ref_state = ref.eval(limb.id, tk);
            ctx.ref_angles[j * horizon + (k - 1)] = ref_state.angle;
            if (k == horizon) ctx.ref_end_velocity[j] = ref_state.velocity;
        }
        CompTables& tb = ctx.tables[j];
        tb.arm_offset = limb.mount_point - human.reference_point;
        tb.u = limb.length * limb.zero_direction;
        tb.w = limb.length * cross(limb.rotation_axis, limb.zero_direction);
        tb.mu = limb.mass * tb.u;
        tb.mw = limb.mass * tb.w;
        const Vec3 mg = limb.mass * human.gravity;
        tb.arm_cross_mg = cross(tb.arm_offset, mg);
        tb.u_cross_mg = cross(tb.u, mg);
        tb.w_cross_mg = cross(tb.w, mg);
        tb.cos0 = std::cos(current[ctx.comp_index[j]].angle);
        tb.sin0 = std::sin(current[ctx.comp_index[j]].angle);
    }

    ctx.theta.resize(n);
    ctx.omega.resize(n);
    ctx.cos_t.resize(n);
    ctx.sin_t.resize(n);
    ctx.half_a_dt2.resize(n);
    ctx.alpha_dt.resize(n);
    return ctx;
}

// cos/sin of a small per-substep rotation; series is full double precision
// for |d| <= 0.05 and anything larger falls back to libm.
inline void rotation_increment(double d, double& cd, double& sd) {
    if (std::abs(d) <= 0.05) {
        const double d2 = d * d;
        cd = 1.0 - d2 * (0.5 - d2 * ((1.0 / 24.0) - d2 * (1.0 / 720.0)));
        sd = d * (1.0 - d2 * ((1.0 / 6.0) - d2 * ((1.0 / 120.0) - d2 * (1.0 / 5040.0))));
    } else {
        cd = std::cos(d);
        sd = std::sin(d);
    }
}

// Where the limb would come to rest relative to its coasting reference if it
// braked at kBrakeReserve * alpha_max from the horizon-end state. Keeping
// this inside the deviation band means a braking candidate stays feasible at
// the next loop, so built-up velocity can never force the trajectory out.
bool stopping_position_ok(double end_angle, double end_velocity, double ref_angle,
                          double ref_velocity, const PlannerConfig& cfg) {
    const double rel_pos = end_angle - ref_angle;
    const double rel_vel = end_velocity - ref_velocity;
    const double brake = kBrakeReserve * cfg.alpha_max;
    const double overshoot = rel_vel * std::abs(rel_vel) / (2.0 * brake);
    return std::abs(rel_pos + overshoot) <= cfg.deviation_limit;
}

// Cost of one acceleration vector over the horizon. Returns false as soon as
// a substep leaves the deviation band (cost is then unset); with
// check_feasibility off, the deviation band is ignored. The angle/velocity
// march below reproduces integrate_constant_alpha step by step, so the first
// substep is bit-identical to what the engine will apply.
bool eval_alphas(std::span<const double> alphas, const StepContext& ctx, bool check_feasibility,
                 double& cost_out) {
    const PlannerConfig& cfg = *ctx.config;
    const double dt = cfg.control_dt;
    const int horizon = cfg.horizon_steps;
    const std::size_t n = ctx.comp_index.size();

    for (std::size_t j = 0; j < n; ++j) {
        const JointState& state = ctx.current[ctx.comp_index[j]];
        ctx.theta[j] = state.angle;
        ctx.omega[j] = state.velocity;
        ctx.cos_t[j] = ctx.tables[j].cos0;
        ctx.sin_t[j] = ctx.tables[j].sin0;
        ctx.half_a_dt2[j] = 0.5 * alphas[j] * dt * dt;
        ctx.alpha_dt[j] = alphas[j] * dt;
    }

    double cost_sum = 0.0;
    for (int k = 1; k <= horizon; ++k) {
        Vec3 moment = ctx.dist_contrib[static_cast<std::size_t>(k - 1)];
        for (std::size_t j = 0; j < n; ++j) {
            const double step = ctx.omega[j] * dt + ctx.half_a_dt2[j];
            ctx.theta[j] = ctx.theta[j] + ctx.omega[j] * dt + ctx.half_a_dt2[j];
            ctx.omega[j] += ctx.alpha_dt[j];
            if (check_feasibility) {
                const double ref_angle = ctx.ref_angles[j * horizon + (k - 1)];
                if (std::abs(ctx.theta[j] - ref_angle) > cfg.deviation_limit) return false;
                if (k == horizon &&
                    !stopping_position_ok(ctx.theta[j], ctx.omega[j], ref_angle,
                                          ctx.ref_end_velocity[j], cfg))
                    return false;
            }

            double cd = 1.0, sd = 0.0;
            rotation_increment(step, cd, sd);
            const double c = ctx.cos_t[j] * cd - ctx.sin_t[j] * sd;
            const double s = ctx.sin_t[j] * cd + ctx.cos_t[j] * sd;
            ctx.cos_t[j] = c;
            ctx.sin_t[j] = s;

            const CompTables& tb = ctx.tables[j];
            const double w2 = ctx.omega[j] * ctx.omega[j];
            const Vec3 p = alphas[j] * tb.mw - w2 * tb.mu;
            const Vec3 q = -(alphas[j] * tb.mu) - w2 * tb.mw;
            const Vec3 m_accel = c * p + s * q;
            const Vec3 r = tb.arm_offset + c * tb.u + s * tb.w;
            moment += tb.arm_cross_mg + c * tb.u_cross_mg + s * tb.w_cross_mg;
            moment += cross(r, m_accel);
        }
        cost_sum += norm(moment);
    }
    cost_out = cost_sum / horizon;
    return true;
}

PlanDecision reference_decision(const StepContext& ctx, bool activated_gate) {
    PlanDecision decision;
    decision.activated = activated_gate;
    decision.fallback = false;
    decision.n_feasible = 0;
    decision.chosen.alphas.assign(ctx.n_comp(), 0.0);
    decision.chosen.feasible = true;
    double cost = 0.0;
    eval_alphas(decision.chosen.alphas, ctx, /*check_feasibility=*/false, cost);
    decision.chosen.cost = cost;
    return decision;
}

PlanDecision fallback_decision(std::size_t n_comp) {
    PlanDecision decision;
    decision.activated = true;
    decision.fallback = true;
    decision.n_feasible = 0;
    decision.chosen.alphas.assign(n_comp, 0.0);
    decision.chosen.feasible = false;
    return decision;
}

}  // namespace

void validate(const PlannerConfig& config) {
    if (!(config.alpha_max > 0.0))
        throw std::invalid_argument("PlannerConfig: alpha_max must be > 0");
    if (!(config.deviation_limit > 0.0))
        throw std::invalid_argument("PlannerConfig: deviation_limit must be > 0");
    if (config.iterations < 1)
        throw std::invalid_argument("PlannerConfig: iterations must be >= 1");
    if (!(config.control_dt > 0.0))
        throw std::invalid_argument("PlannerConfig: control_dt must be > 0");
    if (config.horizon_steps < 1)
        throw std::invalid_argument("PlannerConfig: horizon_steps must be >= 1");
}

bool should_activate(std::span<const JointState> current_states,
                     std::span<const LimbModel> limbs, const HumanModel& human,
                     const ReferenceTrajectory& ref, double t, const PlannerConfig& config) {
    check_system(current_states, limbs);

    // A limb already steered off its reference keeps the planner engaged
    // until it is brought back; otherwise modified trajectories would coast
    // unmanaged whenever the moment prediction dips.
    constexpr double kOffReference = 1e-9;
    for (std::size_t i = 0; i < limbs.size(); ++i) {
        if (limbs[i].id == ref.disturbance_limb_id) continue;
        const JointState ref_state = ref.eval(limbs[i].id, t);
        if (std::abs(current_states[i].angle - ref_state.angle) > kOffReference ||
            std::abs(current_states[i].velocity - ref_state.velocity) > kOffReference)
            return true;
    }

    // Attribute the trigger to the disturbance itself: predict one step with
    // every limb on its reference, then again with the disturbance limb
    // holding zero acceleration. Comparing the two isolates the
    // moment-increasing motion from whatever the norm is already doing.
    std::vector<JointState> with_motion(limbs.size());
    std::vector<JointState> without_motion(limbs.size());
    for (std::size_t i = 0; i < limbs.size(); ++i) {
        const double ref_alpha = ref.profile(limbs[i].id).alpha_at(t);
        with_motion[i] =
            integrate_constant_alpha(current_states[i], ref_alpha, config.control_dt);
        without_motion[i] =
            limbs[i].id == ref.disturbance_limb_id
                ? integrate_constant_alpha(current_states[i], 0.0, config.control_dt)
                : with_motion[i];
    }
    const double t_next = t + config.control_dt;
    const MomentSample predicted = total_moment(limbs, with_motion, human, t_next);
    const MomentSample baseline = total_moment(limbs, without_motion, human, t_next);
    return predicted.norm > baseline.norm + config.activation_threshold;
}

std::vector<double> sample_candidate(Xoshiro256pp& rng, int n_comp_limbs, double alpha_max) {
    if (n_comp_limbs < 1)
        throw std::invalid_argument("sample_candidate: n_comp_limbs must be >= 1");
    std::vector<double> alphas(static_cast<std::size_t>(n_comp_limbs));
    for (auto& a : alphas) a = rng.next_in(-alpha_max, alpha_max);
    return alphas;
}

std::vector<JointState> propagate_disturbance(std::span<const JointState> current_states,
                                              std::span<const LimbModel> limbs,
                                              const ReferenceTrajectory& ref, double t,
                                              const PlannerConfig& config) {
    check_system(current_states, limbs);
    const std::size_t di = disturbance_index(limbs, ref);
    const ConstantAccelProfile& profile = ref.profile(ref.disturbance_limb_id);
    std::vector<JointState> horizon;
    horizon.reserve(static_cast<std::size_t>(config.horizon_steps));
    JointState state = current_states[di];
    for (int k = 0; k < config.horizon_steps; ++k) {
        const double step_start = t + k * config.control_dt;
        state = integrate_constant_alpha(state, profile.alpha_at(step_start), config.control_dt);
        horizon.push_back(state);
    }
    return horizon;
}

CandidatePlan evaluate_candidate(std::span<const double> alphas,
                                 std::span<const JointState> current_states,
                                 std::span<const JointState> disturbance_next,
                                 std::span<const LimbModel> limbs, const HumanModel& human,
                                 const ReferenceTrajectory& ref, double t,
                                 const PlannerConfig& config) {
    check_system(current_states, limbs);
    if (alphas.size() != limbs.size() - 1)
        throw std::invalid_argument("evaluate_candidate: one alpha per compensating limb");
    if (disturbance_next.size() != static_cast<std::size_t>(config.horizon_steps))
        throw std::invalid_argument("evaluate_candidate: disturbance_next must cover the horizon");
    const StepContext ctx =
        make_context(current_states, limbs, human, ref, t, config, disturbance_next);
    CandidatePlan plan;
    plan.alphas.assign(alphas.begin(), alphas.end());
    double cost = 0.0;
    plan.feasible = eval_alphas(alphas, ctx, /*check_feasibility=*/true, cost);
    if (plan.feasible) plan.cost = cost;
    return plan;
}

PlanDecision plan_step(Xoshiro256pp& rng, std::span<const JointState> current_states,
                       std::span<const LimbModel> limbs, const HumanModel& human,
                       const ReferenceTrajectory& ref, double t, const PlannerConfig& config,
                       std::vector<CandidatePlan>* debug_evaluated) {
    check_system(current_states, limbs);
    validate(config);
    const std::vector<JointState> dist_horizon =
        propagate_disturbance(current_states, limbs, ref, t, config);
    const StepContext ctx =
        make_context(current_states, limbs, human, ref, t, config, dist_horizon);

    if (!should_activate(current_states, limbs, human, ref, t, config))
        return reference_decision(ctx, /*activated_gate=*/false);

    const std::size_t n_comp = ctx.n_comp();
    const std::size_t iterations = static_cast<std::size_t>(config.iterations);

    // Draw the whole candidate stream before evaluating anything, so the
    // stream is independent of evaluation scheduling.
    std::vector<double> draws(iterations * n_comp);
    for (double& d : draws) d = rng.next_in(-config.alpha_max, config.alpha_max);

    std::ptrdiff_t best = -1;
    double best_cost = std::numeric_limits<double>::infinity();
    int n_feasible = 0;
    for (std::size_t k = 0; k < iterations; ++k) {
        const std::span<const double> alphas{draws.data() + k * n_comp, n_comp};
        double cost = 0.0;
        const bool feasible = eval_alphas(alphas, ctx, /*check_feasibility=*/true, cost);
        if (debug_evaluated) {
            CandidatePlan plan;
            plan.alphas.assign(alphas.begin(), alphas.end());
            plan.feasible = feasible;
            if (feasible) plan.cost = cost;
            debug_evaluated->push_back(std::move(plan));
        }
        if (!feasible) continue;
        ++n_feasible;
        if (cost < best_cost) {
            best_cost = cost;
            best = static_cast<std::ptrdiff_t>(k);
        }
    }

    if (best < 0) return fallback_decision(n_comp);

    PlanDecision decision;
    decision.activated = true;
    decision.fallback = false;
    decision.n_feasible = n_feasible;
    const std::span<const double> winner{draws.data() + static_cast<std::size_t>(best) * n_comp,
                                         n_comp};
    decision.chosen.alphas.assign(winner.begin(), winner.end());
    decision.chosen.cost = best_cost;
    decision.chosen.feasible = true;
    return decision;
}

PlanDecision grid_search_step(std::span<const JointState> current_states,
                              std::span<const LimbModel> limbs, const HumanModel& human,
                              const ReferenceTrajectory& ref, double t,
                              const PlannerConfig& config, int grid_points_per_limb) {
    check_system(current_states, limbs);
    validate(config);
    if (grid_points_per_limb < 2)
        throw std::invalid_argument("grid_search_step: grid_points_per_limb must be >= 2");
    const std::size_t n_comp = limbs.size() - 1;
    constexpr std::uint64_t kMaxGrid = 10'000'000;
    std::uint64_t total = 1;
    for (std::size_t j = 0; j < n_comp; ++j) {
        total *= static_cast<std::uint64_t>(grid_points_per_limb);
        if (total > kMaxGrid)
            throw std::invalid_argument("grid_search_step: grid exceeds 1e7 candidates");
    }

    const std::vector<JointState> dist_horizon =
        propagate_disturbance(current_states, limbs, ref, t, config);
    const StepContext ctx =
        make_context(current_states, limbs, human, ref, t, config, dist_horizon);

    if (!should_activate(current_states, limbs, human, ref, t, config))
        return reference_decision(ctx, /*activated_gate=*/false);

    const double step = 2.0 * config.alpha_max / (grid_points_per_limb - 1);
    std::vector<int> digits(n_comp, 0);
    std::vector<double> alphas(n_comp, -config.alpha_max);

    std::vector<double> best_alphas;
    double best_cost = std::numeric_limits<double>::infinity();
    int n_feasible = 0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        double cost = 0.0;
        if (eval_alphas(alphas, ctx, /*check_feasibility=*/true, cost)) {
            ++n_feasible;
            if (cost < best_cost) {
                best_cost = cost;
                best_alphas = alphas;
            }
        }
        // odometer: last limb varies fastest
        for (std::size_t j = n_comp; j-- > 0;) {
            if (++digits[j] < grid_points_per_limb) {
                alphas[j] = -config.alpha_max + digits[j] * step;
                break;
            }
            digits[j] = 0;
            alphas[j] = -config.alpha_max;
        }
    }

    if (best_alphas.empty()) return fallback_decision(n_comp);

    PlanDecision decision;
    decision.activated = true;
    decision.fallback = false;
    decision.n_feasible = n_feasible;
    decision.chosen.alphas = std::move(best_alphas);
    decision.chosen.cost = best_cost;
    decision.chosen.feasible = true;
    return decision;
}

}  // namespace srlplan
