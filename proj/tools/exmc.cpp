#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "exmc/catalog.hpp"
#include "exmc/config.hpp"
#include "exmc/errors.hpp"
#include "exmc/experiment.hpp"

namespace {

int run(const exmc::ExperimentConfig& config, const exmc::RunOptions& options) {
  const auto result = exmc::run_experiment(config, options);
  std::cout << result.summary;
  std::cout << "wrote " << (options.out_dir / "report.json").string() << '\n';
  return result.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exchange algorithm sampler and exact-analysis harness"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
  std::string out_dir = ".";
  auto add_run_flags = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "override the config seed");
    cmd->add_option("--threads", threads, "worker threads for matrix builds and replications")
        ->check(CLI::Range(1u, 256u));
    cmd->add_option("--out-dir", out_dir, "directory for trace, report and summary files");
  };

  std::string config_path;
  auto* run_cmd = app.add_subcommand("run", "run an experiment config file");
  run_cmd->add_option("config", config_path, "config file")->required()->check(CLI::ExistingFile);
  add_run_flags(run_cmd);

  auto* list_cmd = app.add_subcommand("list", "list built-in experiments");

  std::string name;
  auto* repro_cmd = app.add_subcommand("reproduce", "run a built-in experiment");
  repro_cmd->add_option("name", name, "experiment name (see `list`)")->required();
  add_run_flags(repro_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (list_cmd->parsed()) {
      for (const auto& e : exmc::catalog()) std::printf("%-18s %s\n", e.name.c_str(), e.claim.c_str());
      return 0;
    }
    exmc::RunOptions options;
    options.out_dir = out_dir;
    options.threads = threads;
    options.seed = seed;
    if (run_cmd->parsed()) return run(exmc::load_config(config_path), options);
    const auto* entry = exmc::find_experiment(name);
    if (!entry) {
      std::cerr << "unknown experiment '" << name << "'; try `exmc list`\n";
      return 2;
    }
    return run(exmc::parse_config(entry->config_text), options);
  } catch (const exmc::ConfigError& e) {
    std::cerr << "config error at " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
