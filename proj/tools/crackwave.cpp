// crackwave <subcommand> --config <path> [--out <dir>] [--jobs N]
#include <algorithm>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "crackwave/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Steady Mode III crack in couple-stress elasticity: figure data and validation"};
  app.require_subcommand(1);

  std::string config_path, out_dir;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  for (const auto& name : crackwave::subcommands()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "key = value config file")->required();
    sub->add_option("--out", out_dir, "output directory (overrides output.dir)");
    sub->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : crackwave::kExitConfig;
  }

  const std::string sub = app.get_subcommands().front()->get_name();
  crackwave::RunConfig config;
  try {
    config = crackwave::load_config(config_path);
  } catch (const crackwave::Error& e) {
    std::cerr << "crackwave " << sub << ": config error: " << e.what() << "\n";
    return crackwave::kExitConfig;
  }
  return crackwave::run(sub, config, out_dir.empty() ? config.out_dir : out_dir, jobs, std::cout, std::cerr);
}
