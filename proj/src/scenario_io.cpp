#include "srlplan/scenario_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "srlplan/units.hpp"

namespace srlplan {

namespace {

using nlohmann::json;

std::string fmt_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string fmt_vec(const Vec3& v) {
    return "[" + fmt_num(v.x) + ", " + fmt_num(v.y) + ", " + fmt_num(v.z) + "]";
}

struct Cursor {
    const std::string& origin;
    std::vector<std::string>& defaults;

    [[noreturn]] void value_error(const std::string& path, const std::string& what) const {
        throw ConfigValueError(origin + ": " + path + ": " + what);
    }

    void note_default(const std::string& path, const std::string& value) const {
        defaults.push_back(path + " = " + value);
    }
};

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed, const Cursor& cur) {
    for (const auto& item : obj.items()) {
        const bool known =
            std::any_of(allowed.begin(), allowed.end(),
                        [&](const char* key) { return item.key() == key; });
        if (!known)
            throw ConfigKeyError(cur.origin + ": unknown key '" + path + item.key() + "'");
    }
}

const json& need(const json& obj, const std::string& path, const char* key, const Cursor& cur) {
    auto it = obj.find(key);
    if (it == obj.end()) cur.value_error(path + key, "required key missing");
    return *it;
}

double need_number(const json& obj, const std::string& path, const char* key,
                   const Cursor& cur) {
    const json& v = need(obj, path, key, cur);
    if (!v.is_number()) cur.value_error(path + key, "expected a number");
    return v.get<double>();
}

double opt_number(const json& obj, const std::string& path, const char* key, double def,
                  const Cursor& cur) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        cur.note_default(path + key, fmt_num(def));
        return def;
    }
    if (!it->is_number()) cur.value_error(path + key, "expected a number");
    return it->get<double>();
}

std::int64_t opt_integer(const json& obj, const std::string& path, const char* key,
                         std::int64_t def, const Cursor& cur) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        cur.note_default(path + key, std::to_string(def));
        return def;
    }
    if (!it->is_number_integer()) cur.value_error(path + key, "expected an integer");
    return it->get<std::int64_t>();
}

bool opt_bool(const json& obj, const std::string& path, const char* key, bool def,
              const Cursor& cur) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        cur.note_default(path + key, def ? "true" : "false");
        return def;
    }
    if (!it->is_boolean()) cur.value_error(path + key, "expected a boolean");
    return it->get<bool>();
}

Vec3 as_vec3(const json& v, const std::string& path, const Cursor& cur) {
    if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() ||
        !v[2].is_number())
        cur.value_error(path, "expected an array of 3 numbers");
    return Vec3{v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

Vec3 opt_vec3(const json& obj, const std::string& path, const char* key, const Vec3& def,
              const Cursor& cur) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        cur.note_default(path + key, fmt_vec(def));
        return def;
    }
    return as_vec3(*it, path + key, cur);
}

HumanModel parse_human(const json& root, const Cursor& cur) {
    const json& h = need(root, "", "human", cur);
    if (!h.is_object()) cur.value_error("human", "expected an object");
    check_keys(h, "human.",
               {"body_mass_kg", "thumb_tip_reach_m", "reference_point_m", "gravity_mps2"}, cur);
    HumanModel human;
    human.body_mass = need_number(h, "human.", "body_mass_kg", cur);
    human.thumb_tip_reach = need_number(h, "human.", "thumb_tip_reach_m", cur);
    human.reference_point = opt_vec3(h, "human.", "reference_point_m", Vec3{}, cur);
    human.gravity =
        opt_vec3(h, "human.", "gravity_mps2", Vec3{0.0, 0.0, -kStandardGravity}, cur);
    return human;
}

struct ParsedLimb {
    LimbModel limb;
    JointState initial;
};

ParsedLimb parse_limb(const json& l, const std::string& path, const HumanModel& human,
                      const Cursor& cur) {
    if (!l.is_object()) cur.value_error(path, "expected an object");
    check_keys(l, path + ".",
               {"id", "mount_point_m", "rotation_axis", "zero_direction", "length_m", "mass_kg",
                "mass_fraction_of_body", "initial_angle_deg", "initial_velocity_degs"},
               cur);
    ParsedLimb out;
    const json& id = need(l, path + ".", "id", cur);
    if (!id.is_number_integer()) cur.value_error(path + ".id", "expected an integer");
    out.limb.id = id.get<int>();
    out.limb.mount_point = as_vec3(need(l, path + ".", "mount_point_m", cur),
                                   path + ".mount_point_m", cur);
    out.limb.rotation_axis =
        opt_vec3(l, path + ".", "rotation_axis", Vec3{0.0, 0.0, 1.0}, cur);
    out.limb.zero_direction =
        opt_vec3(l, path + ".", "zero_direction", Vec3{1.0, 0.0, 0.0}, cur);
    out.limb.length = opt_number(l, path + ".", "length_m", human.thumb_tip_reach, cur);

    const bool has_kg = l.contains("mass_kg");
    const bool has_fraction = l.contains("mass_fraction_of_body");
    if (has_kg && has_fraction)
        cur.value_error(path, "specify exactly one of mass_kg and mass_fraction_of_body");
    if (has_kg) {
        out.limb.mass = need_number(l, path + ".", "mass_kg", cur);
    } else {
        const double fraction =
            opt_number(l, path + ".", "mass_fraction_of_body", 0.10, cur);
        out.limb.mass = fraction * human.body_mass;
    }

    out.initial.angle = deg_to_rad(opt_number(l, path + ".", "initial_angle_deg", 0.0, cur));
    out.initial.velocity =
        deg_to_rad(opt_number(l, path + ".", "initial_velocity_degs", 0.0, cur));
    out.initial.acceleration = 0.0;
    return out;
}

PlannerConfig parse_planner(const json& root, const Cursor& cur) {
    const PlannerConfig defaults;
    PlannerConfig config;
    auto it = root.find("planner");
    if (it == root.end()) {
        cur.note_default("planner", "all defaults");
        return config;
    }
    const json& p = *it;
    if (!p.is_object()) cur.value_error("planner", "expected an object");
    check_keys(p, "planner.",
               {"alpha_max_degs2", "deviation_limit_deg", "iterations", "control_dt_s",
                "horizon_steps", "activation_threshold_nm"},
               cur);
    config.alpha_max = deg_to_rad(
        opt_number(p, "planner.", "alpha_max_degs2", rad_to_deg(defaults.alpha_max), cur));
    config.deviation_limit = deg_to_rad(opt_number(p, "planner.", "deviation_limit_deg",
                                                   rad_to_deg(defaults.deviation_limit), cur));
    config.iterations =
        static_cast<int>(opt_integer(p, "planner.", "iterations", defaults.iterations, cur));
    config.control_dt = opt_number(p, "planner.", "control_dt_s", defaults.control_dt, cur);
    config.horizon_steps = static_cast<int>(
        opt_integer(p, "planner.", "horizon_steps", defaults.horizon_steps, cur));
    config.activation_threshold = opt_number(p, "planner.", "activation_threshold_nm",
                                             defaults.activation_threshold, cur);
    return config;
}

ParsedScenario parse_document(const json& root, const std::string& origin) {
    ParsedScenario out;
    Cursor cur{origin, out.applied_defaults};
    if (!root.is_object()) cur.value_error("<document>", "expected a JSON object");
    check_keys(root, "",
               {"case", "human", "limbs", "disturbance", "planner", "compensation_enabled",
                "duration_s"},
               cur);

    Scenario& scenario = out.scenario;
    if (auto it = root.find("case"); it != root.end()) {
        if (!it->is_string()) cur.value_error("case", "expected a string");
        scenario.case_label = it->get<std::string>();
    } else {
        cur.note_default("case", "\"unnamed\"");
    }

    scenario.human = parse_human(root, cur);

    std::vector<ParsedLimb> limbs;
    if (auto it = root.find("limbs"); it != root.end()) {
        if (!it->is_array() || it->empty()) cur.value_error("limbs", "expected a non-empty array");
        for (std::size_t i = 0; i < it->size(); ++i)
            limbs.push_back(
                parse_limb((*it)[i], "limbs[" + std::to_string(i) + "]", scenario.human, cur));
    } else {
        cur.note_default("limbs", "built-in 4-limb layout");
        for (const LimbModel& limb : default_limb_set(scenario.human))
            limbs.push_back(ParsedLimb{limb, JointState{}});
    }
    std::sort(limbs.begin(), limbs.end(),
              [](const ParsedLimb& a, const ParsedLimb& b) { return a.limb.id < b.limb.id; });
    for (ParsedLimb& pl : limbs) {
        scenario.limbs.push_back(pl.limb);
        scenario.initial_states.push_back(pl.initial);
    }

    const json& d = need(root, "", "disturbance", cur);
    if (!d.is_object()) cur.value_error("disturbance", "expected an object");
    check_keys(d, "disturbance.", {"limb_id", "total_angle_deg", "duration_s"}, cur);
    const json& did = need(d, "disturbance.", "limb_id", cur);
    if (!did.is_number_integer()) cur.value_error("disturbance.limb_id", "expected an integer");
    scenario.disturbance_limb_id = did.get<int>();
    const double total_angle =
        deg_to_rad(need_number(d, "disturbance.", "total_angle_deg", cur));
    const double dist_duration = need_number(d, "disturbance.", "duration_s", cur);
    if (!(dist_duration > 0.0))
        cur.value_error("disturbance.duration_s", "must be > 0");
    scenario.disturbance = disturbance_profile(total_angle, dist_duration);

    scenario.planner = parse_planner(root, cur);
    scenario.compensation_enabled = opt_bool(root, "", "compensation_enabled", true, cur);
    scenario.duration = opt_number(root, "", "duration_s", dist_duration, cur);

    try {
        validate(scenario);
    } catch (const std::invalid_argument& e) {
        throw ConfigValueError(origin + ": " + e.what());
    }
    return out;
}

}  // namespace

ParsedScenario parse_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigFileError("cannot open scenario config '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario_text(buffer.str(), path);
}

ParsedScenario parse_scenario_text(const std::string& text, const std::string& origin) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigSyntaxError(origin + ": " + e.what());
    }
    return parse_document(root, origin);
}

std::vector<LimbModel> default_limb_set(const HumanModel& human) {
    const double mass = 0.10 * human.body_mass;
    const double length = human.thumb_tip_reach;
    std::vector<LimbModel> limbs(4);
    const double y[4] = {0.25, -0.25, 0.25, -0.25};
    const double z[4] = {0.25, 0.25, -0.25, -0.25};
    for (int i = 0; i < 4; ++i) {
        limbs[i].id = i + 1;
        limbs[i].mount_point = Vec3{0.0, y[i], z[i]};
        limbs[i].rotation_axis = Vec3{0.0, 0.0, 1.0};
        // Upper limbs point forward, lower limbs backward: the neutral
        // posture is balanced (zero static moment), so the backside sweep of
        // limb 2 is what unbalances it.
        limbs[i].zero_direction = (i < 2) ? Vec3{1.0, 0.0, 0.0} : Vec3{-1.0, 0.0, 0.0};
        limbs[i].length = length;
        limbs[i].mass = mass;
    }
    return limbs;
}

Scenario default_oracle_scenario() {
    Scenario scenario;
    scenario.case_label = "oracle-1limb";
    scenario.human = HumanModel{};

    LimbModel comp;
    comp.id = 1;
    comp.mount_point = Vec3{0.0, 0.25, 0.25};
    comp.rotation_axis = Vec3{0.0, 0.0, 1.0};
    comp.zero_direction = Vec3{1.0, 0.0, 0.0};
    comp.length = scenario.human.thumb_tip_reach;
    comp.mass = 0.10 * scenario.human.body_mass;

    // Mounted and aimed opposite to limb #1 so the static gravity moments
    // cancel and the cost is dominated by the motion terms.
    LimbModel dist = comp;
    dist.id = 2;
    dist.mount_point = Vec3{0.0, -0.25, -0.25};
    dist.zero_direction = Vec3{-1.0, 0.0, 0.0};

    scenario.limbs = {comp, dist};
    scenario.initial_states = {JointState{}, JointState{}};
    scenario.disturbance_limb_id = 2;
    scenario.disturbance = disturbance_profile(deg_to_rad(90.0), 2.5);
    scenario.duration = 2.5;
    return scenario;
}

}  // namespace srlplan
