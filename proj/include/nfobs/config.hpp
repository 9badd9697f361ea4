#pragma once

#include <string>
#include <vector>

#include "nfobs/sim.hpp"

namespace nfobs {

struct ScenarioConfig {
  Scenario scenario;
  int stride = 100;
};

/// Every accepted key, as a dotted path.
const std::vector<std::string>& scenario_keys();

/// Resolves an override key: exact dotted path, or a unique dotted suffix
/// (`l` → observer.l, `sigmoid.mu` → model.sigmoid.mu). ConfigError names
/// unknown or ambiguous keys.
std::string resolve_key(const std::string& key);

/// Parses YAML scenario text with sections model/input/observer/sim, then
/// applies `key=value` overrides. Unknown keys raise ConfigError.
ScenarioConfig parse_scenario(const std::string& text, const std::vector<std::string>& overrides = {});

/// As parse_scenario, reading from a file (IoError names the path).
ScenarioConfig load_scenario(const std::string& path, const std::vector<std::string>& overrides = {});

/// The canonical experiment: J₀=-1, J₁=1.5, μ=10, h₀=1, Dirac(1),
/// ε=0.1, β=0.1, ω=2π/10, τ=5, δ=0.3, η=1e-3, R=6, l=15, dt=1e-5, t ∈ [0,4].
ScenarioConfig paper_scenario();

/// YAML text of paper_scenario().
std::string paper_scenario_yaml();

}  // namespace nfobs
