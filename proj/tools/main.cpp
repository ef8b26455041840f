#include <iostream>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "opsplit/cli/commands.hpp"
#include "opsplit/cli/config.hpp"

using namespace opsplit::cli;

int main(int argc, char** argv) {
  CLI::App app{"Operator-splitting solver for u_t + u u_x - K u = 0 on a periodic interval"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  app.add_option("-c,--config", config_path, "key=value configuration file");

  // One string option per config key; only the ones given on the command line become overrides.
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  for (const auto& key : config_keys()) {
    options[key] = app.add_option("--" + key, values[key], "override '" + key + "' (env " + env_name(key) + ")");
  }
  std::string name_alias;
  auto* name_opt = app.add_option("--name", name_alias, "alias for --symbol");
  name_opt->excludes(options["symbol"]);

  std::optional<Subcommand> chosen;
  const std::pair<const char*, const char*> subs[] = {
      {"run", "evolve one trajectory and write diagnostics"},
      {"converge", "global-error refinement study"},
      {"local-order", "one-step error refinement study"},
      {"verify-symbol", "check a symbol against the dissipativity and cocycle conditions"},
      {"verify-lemmas", "randomized scans of the commutator and bilinear estimates"},
  };
  for (const auto& [sub, help] : subs) {
    app.add_subcommand(sub, help)->callback([&chosen, s = std::string(sub)] { chosen = subcommand_from_string(s); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_code::config_error;
  }

  Overrides flags;
  for (const auto& key : config_keys()) {
    if (options[key]->count() > 0) flags.emplace_back(key, values[key]);
  }
  if (name_opt->count() > 0) flags.emplace_back("symbol", name_alias);

  RunConfig cfg;
  try {
    std::optional<std::filesystem::path> file;
    if (!config_path.empty()) file = config_path;
    cfg = parse_config(file, flags, process_env());
  } catch (const ConfigError& e) {
    std::cout << "error=" << e.kind() << "\nmessage=" << e.what() << '\n';
    return exit_code::config_error;
  }
  return run_command(*chosen, cfg, std::cout);
}
