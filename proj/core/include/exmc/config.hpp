#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace exmc {

/// A `type` plus ordered key/value parameters; mixture priors nest
/// component blocks.
struct ConfigBlock {
  std::string type;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<ConfigBlock> components;

  const std::string* find(std::string_view key) const;
  bool operator==(const ConfigBlock&) const = default;
};

enum class AlgorithmChoice { mh, exchange, both };

std::string to_string(AlgorithmChoice choice);

struct GridConfig {
  std::optional<double> lo;
  std::optional<double> hi;
  std::size_t size = 101;

  bool operator==(const GridConfig&) const = default;
};

inline const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names{"peskun", "variance-sandwich", "tv-modulus",
                                              "non-negligibility", "tail", "clt",
                                              "rejection-prob", "spectrum"};
  return names;
}

/// One experiment. Serialized as a Boost.PropertyTree INFO document:
/// `key value` lines and `key { ... }` blocks.
struct ExperimentConfig {
  std::string name;
  AlgorithmChoice algorithm = AlgorithmChoice::exchange;
  double laziness = 1.0;
  std::size_t steps = 100000;
  std::size_t replications = 2000;
  std::size_t clt_steps = 10000;
  std::size_t batches = 100;
  std::optional<std::uint64_t> seed;
  double data = 0.0;
  std::optional<double> theta0;
  double delta = 0.5;
  std::vector<std::string> checks;
  ConfigBlock model;
  ConfigBlock prior;
  ConfigBlock proposal;
  std::optional<GridConfig> grid;
  std::vector<double> rejection_thetas;

  bool has_check(std::string_view check) const;
  bool operator==(const ExperimentConfig&) const = default;
};

/// Parses and validates field syntax. Throws ConfigError naming the field.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::string& path);

/// Writes an INFO document that parse_config maps back to an equal config.
std::string serialize_config(const ExperimentConfig& config);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

}  // namespace exmc
