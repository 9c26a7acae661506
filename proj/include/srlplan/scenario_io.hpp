#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "srlplan/scenario.hpp"

namespace srlplan {

// Scenario config errors, one class per failure kind so callers can
// distinguish them. Messages carry the file and the offending key or line.
class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Missing or unreadable file.
class ConfigFileError : public ConfigError {
    using ConfigError::ConfigError;
};

// Malformed JSON; the message carries the parser's line/column.
class ConfigSyntaxError : public ConfigError {
    using ConfigError::ConfigError;
};

// A key the schema does not know (parsing is strict).
class ConfigKeyError : public ConfigError {
    using ConfigError::ConfigError;
};

// Wrong type, missing required key, or a scenario invariant violation.
class ConfigValueError : public ConfigError {
    using ConfigError::ConfigError;
};

struct ParsedScenario {
    Scenario scenario;
    // One "key = value" line per default the parser resolved, for the
    // provenance banner.
    std::vector<std::string> applied_defaults;
};

// Load and fully resolve a scenario config: fractions to kg, degrees to
// radians, defaults applied and recorded. The result passes
// validate(Scenario).
ParsedScenario parse_scenario(const std::string& path);

// Same, from an in-memory document; `origin` names it in error messages.
ParsedScenario parse_scenario_text(const std::string& text, const std::string& origin);

// The documented default 4-limb layout: ids 1..4 mounted at
// (0, +-0.25, +-0.25) m, all rotating about +z, upper limbs (1, 2) aimed
// forward and lower limbs (3, 4) backward so the neutral posture is
// balanced; link length = thumb-tip reach, mass = 0.10 * body mass.
std::vector<LimbModel> default_limb_set(const HumanModel& human);

// Built-in single-compensating-limb instance used by `oracle-check`: two
// antisymmetric limbs so the static gravity moment cancels, limb #2 running
// the 0->90 deg disturbance in 2.5 s.
Scenario default_oracle_scenario();

}  // namespace srlplan
