#pragma once

// Scenario configuration: schema, YAML parsing/serialization, validation and
// bundled presets.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ddg/model.hpp"
#include "ddg/state.hpp"

namespace ddg {

struct PinnedAngle {
  int axis_a = 0;  // zero-based, axis_a < axis_b
  int axis_b = 1;
  double radians = 0.0;

  bool operator==(const PinnedAngle&) const = default;
};

/// Initial parameters fixed by the config. Anything left unset is drawn
/// uniformly within its range. When `angles` is set, unlisted angles are 0.
struct PinnedDgc {
  std::optional<std::vector<double>> center;
  std::optional<std::vector<double>> sigma;
  std::optional<double> weight;
  std::optional<std::vector<PinnedAngle>> angles;
  std::optional<LocalSettings> local;  // overrides the scenario-wide settings

  bool operator==(const PinnedDgc&) const = default;
};

struct ScenarioConfig {
  std::string name;
  std::uint64_t seed = 1;
  std::int64_t ticks = 10000;

  int initial_dims = 2;
  CountRange dims{2, 5};
  int initial_components = 5;
  CountRange components{2, 10};
  int initial_clusters = 5;
  CountRange clusters{2, 10};

  std::vector<double> lower;  // one entry per dimension up to dims.max
  std::vector<double> upper;
  Range sigma{5.0, 25.0};
  Range weight{0.5, 3.0};
  Range angle{-std::numbers::pi, std::numbers::pi};

  LocalSettings local;
  GlobalSettings global;

  std::size_t capacity = 2500;
  double sample_prob = 0.05;
  double refresh_percent = 2.0;

  std::vector<PinnedDgc> dgcs;

  std::int64_t snapshot_every = 0;
  bool snapshot_on_resample = false;
  std::string output_dir;

  bool operator==(const ScenarioConfig&) const = default;

  Bounds bounds() const;
  SamplingSettings sampling() const;
};

/// Repository defaults with every dynamic enabled.
ScenarioConfig default_config();

/// Parses and validates YAML text. Syntax errors carry line and column;
/// semantic errors carry the dotted field path. Unknown keys are rejected.
ScenarioConfig parse_config(std::string_view text);

/// Normalized YAML; parse_config(serialize_config(c)) == c.
std::string serialize_config(const ScenarioConfig& config);

/// Throws ConfigError on the first invalid field; returns advisory warnings.
std::vector<std::string> validate(const ScenarioConfig& config);

/// FNV-1a of the normalized serialization.
std::uint64_t config_hash(const ScenarioConfig& config);

std::vector<std::string> preset_names();

/// Throws ConfigError for an unknown name.
ScenarioConfig preset(std::string_view name);

}  // namespace ddg
