#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "genericlab/cli/config.hpp"
#include "genericlab/cli/report.hpp"

namespace genericlab::cli {

struct CommandSpec {
  std::string name;
  std::string summary;
  std::vector<KeySpec> keys;
};

/// rokhlin, perturb, typedist, rotation, witness, spectral
const std::vector<CommandSpec>& experiment_commands();
/// distance, rokhlin, bottleneck, lp
const std::vector<CommandSpec>& oracle_commands();

const CommandSpec& find_command(const std::vector<CommandSpec>& table, const std::string& name);
ExperimentConfig make_config(const CommandSpec& spec);

/// Key list with defaults, for --help.
std::string describe_keys(const CommandSpec& spec);

Report run_experiment(const ExperimentConfig& cfg, std::uint64_t seed);

/// Size caps for the brute-force oracles. GENERICLAB_CAP, when set,
/// replaces all of them.
struct OracleCaps {
  std::size_t atoms = 12;
  std::size_t points = 6;
  std::size_t variables = 16;
};
OracleCaps caps_from_environment();

/// Requests above the caps raise ConfigError.
Report run_oracle(const ExperimentConfig& cfg, std::uint64_t seed, const OracleCaps& caps);

}  // namespace genericlab::cli
