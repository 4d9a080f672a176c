// Batch driver: one subcommand per experiment, plus brute-force oracles.
#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "genericlab/cli/commands.hpp"

namespace {

using namespace genericlab::cli;

struct CommonFlags {
  std::string config_path;
  std::string out_path;
  std::uint64_t seed = 1;
  std::string format = "jsonl";
  std::vector<std::string> overrides;
};

void add_common(CLI::App* app, CommonFlags& flags) {
  app->add_option("--config", flags.config_path, "key=value config file");
  app->add_option("--out", flags.out_path, "write the report here instead of stdout");
  app->add_option("--seed", flags.seed, "seed for every random choice (recorded in the report)")->capture_default_str();
  app->add_option("--format", flags.format, "jsonl, csv or table")->capture_default_str();
  app->add_option("--set", flags.overrides, "extra key=value settings, applied after --config");
}

ExperimentConfig load(const CommandSpec& spec, const CommonFlags& flags) {
  ExperimentConfig cfg = make_config(spec);
  if (!flags.config_path.empty()) cfg.load_file(flags.config_path);
  for (const auto& kv : flags.overrides) cfg.load_text(kv, "--set");
  return cfg;
}

int emit(const Report& report, Format format, const CommonFlags& flags) {
  const std::string text = render(report, format);
  if (flags.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(flags.out_path);
    if (!out) throw ConfigError("cannot write '" + flags.out_path + "'");
    out << text;
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"genericlab: finite experiments on measure algebras, type trees and circle spectra"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::optional<std::string> chosen;
  for (const auto& spec : experiment_commands()) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.summary);
    add_common(sub, flags);
    sub->footer(describe_keys(spec));
    sub->callback([&chosen, name = spec.name] { chosen = name; });
  }

  CLI::App* oracle = app.add_subcommand("oracle", "compare fast routines against brute force (GENERICLAB_CAP overrides caps)");
  oracle->require_subcommand(1);
  std::optional<std::string> chosen_oracle;
  for (const auto& spec : oracle_commands()) {
    CLI::App* sub = oracle->add_subcommand(spec.name, spec.summary);
    add_common(sub, flags);
    sub->footer(describe_keys(spec));
    sub->callback([&chosen_oracle, name = spec.name] { chosen_oracle = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Format format = parse_format(flags.format);
    if (chosen_oracle) {
      const ExperimentConfig cfg = load(find_command(oracle_commands(), *chosen_oracle), flags);
      return emit(run_oracle(cfg, flags.seed, caps_from_environment()), format, flags);
    }
    const ExperimentConfig cfg = load(find_command(experiment_commands(), *chosen), flags);
    return emit(run_experiment(cfg, flags.seed), format, flags);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failed: " << e.what() << '\n';
    return 1;
  }
}
