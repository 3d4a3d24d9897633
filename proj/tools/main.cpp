#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spinring/config.hpp"
#include "spinring/eigensolver.hpp"
#include "spinring/presets.hpp"
#include "spinring/results_io.hpp"
#include "spinring/scenario.hpp"
#include "verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct RunArgs {
  std::string config;
  std::string preset;
  std::string out;
  std::string format;
  std::vector<std::string> overrides;
  int threads = 0;
};

spinring::ConfigFile assemble_config(const RunArgs& args) {
  using spinring::ConfigError;
  using spinring::ConfigFile;
  if (args.config.empty() && args.preset.empty()) throw ConfigError("", "run needs --config or --preset");
  std::optional<ConfigFile> cfg;
  if (!args.preset.empty()) {
    try {
      const auto& p = spinring::find_preset(args.preset);
      cfg = ConfigFile::parse(p.config, "preset:" + std::string(p.name));
    } catch (const std::invalid_argument& e) {
      throw ConfigError("", e.what());
    }
  }
  if (!args.config.empty()) {
    auto file = ConfigFile::load(args.config);
    if (!cfg) {
      cfg = std::move(file);
    } else {
      for (const auto& k : file.keys()) cfg->set(k, file.get(k));
    }
  }
  for (const auto& kv : args.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ConfigError("", "--set expects key=value, got '" + kv + "'");
    auto key = kv.substr(0, eq);
    auto value = kv.substr(eq + 1);
    key.erase(key.find_last_not_of(' ') + 1);
    value.erase(0, value.find_first_not_of(' '));
    cfg->set(key, value);
  }
  return *cfg;
}

int run_command(const RunArgs& args) {
  try {
    const auto cfg = assemble_config(args);
    const auto scenario = spinring::scenario_from_config(cfg);
    spinring::Format format = spinring::Format::Csv;
    if (!args.format.empty()) {
      format = spinring::parse_format(args.format);
    } else if (std::filesystem::path(args.out).extension() == ".json") {
      format = spinring::Format::Json;
    }
    spinring::RunOptions opts;
    opts.threads = args.threads > 0 ? args.threads : spinring::default_thread_count();
    const auto table = spinring::run_scenario(scenario, opts);
    spinring::write_results(table, args.out, format);
    std::cerr << "wrote " << table.rows.size() << " rows to " << args.out << "\n";
    return kExitOk;
  } catch (const spinring::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const spinring::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const spinring::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact diagonalization of twisted Ising spin rings"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "evaluate a scenario and write a CSV or JSON table");
  run->add_option("--config", run_args.config, "config file (keys override the preset, if both are given)")
      ->check(CLI::ExistingFile);
  run->add_option("--preset", run_args.preset, "built-in scenario name");
  run->add_option("--out", run_args.out, "output path")->required();
  run->add_option("--format", run_args.format, "csv or json (default: from the extension, else csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  run->add_option("--set", run_args.overrides, "override a config key, key=value (repeatable)");
  run->add_option("--threads", run_args.threads, "worker threads (default: SPINRING_THREADS or all cores)")
      ->check(CLI::PositiveNumber);

  auto* list = app.add_subcommand("list-presets", "print the built-in scenario names");

  std::string show_name;
  auto* show = app.add_subcommand("show-preset", "print the config text of a built-in scenario");
  show->add_option("name", show_name, "preset name")->required();

  auto* verify = app.add_subcommand("verify", "run the fast invariant checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (*run) return run_command(run_args);
  if (*list) {
    for (const auto& p : spinring::presets()) std::cout << p.name << "\t" << p.description << "\n";
    return kExitOk;
  }
  if (*show) {
    try {
      std::cout << spinring::find_preset(show_name).config;
      return kExitOk;
    } catch (const std::invalid_argument& e) {
      std::cerr << e.what() << "\n";
      return kExitConfig;
    }
  }
  if (*verify) {
    try {
      return spinring::cli::run_verify(std::cout) == 0 ? kExitOk : kExitNumerical;
    } catch (const spinring::NumericalError& e) {
      std::cerr << "numerical failure: " << e.what() << "\n";
      return kExitNumerical;
    }
  }
  return kExitFailure;
}
