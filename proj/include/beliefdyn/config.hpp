#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "beliefdyn/model.hpp"
#include "beliefdyn/tolerances.hpp"

namespace beliefdyn {

using json = nlohmann::ordered_json;

// Parameters for random scenario construction. Either an explicit 0/1
// topic pattern or a density; all draws come from the seed.
struct GeneratorSpec {
  int n = 0;
  int m = 0;
  std::optional<BoolMatrix> pattern;  // diagonal is forced on
  double pattern_density = 0.35;
  bool competition = false;
  double sign_flip_prob = 0.4;
  std::uint64_t seed = 0;
};

// A fully resolved scenario: validated network and profile, explicit
// initial state, tolerances and output location.
struct ScenarioConfig {
  std::string name;
  std::string description;
  InfluenceNetwork net;
  LogicProfile profile;
  Eigen::VectorXd x0;  // individual-major, entries in [-1, 1]
  Tolerances tols;
  std::string output_dir;
  std::vector<std::string> warnings;  // renormalization notes from validation
  std::optional<GeneratorSpec> generated_from;
};

// Reads and validates a scenario config. A "generator" config is resolved
// into explicit matrices on load, so every consumer sees the same shape.
// Throws ParseError for structural problems (message names the field) and
// ConfigValidationError when a parsed matrix fails validation.
ScenarioConfig load_config(const std::string& path);

// Same, from an already parsed document; `origin` labels error messages.
ScenarioConfig parse_config(const json& doc, const std::string& origin);

// Serialization of a resolved config. load(save(cfg)) reproduces the same
// matrices bit for bit; doubles are emitted with shortest round-trip text.
json config_to_json(const ScenarioConfig& cfg);
void save_config(const ScenarioConfig& cfg, const std::string& path);

}  // namespace beliefdyn
