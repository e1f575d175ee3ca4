#include <cstdlib>
#include <iostream>
#include <string>

#include <omp.h>

#include <CLI11.hpp>

#include "worm3/commands.hpp"
#include "worm3/config.hpp"
#include "worm3/errors.hpp"

int main(int argc, char** argv) {
  CLI::App app{"worm3: numerical checks for worm-type domains"};
  std::string command, config_path, out_dir = ".";
  std::uint64_t seed = 0;
  int threads = 0;
  app.add_option("command", command, "certify | select | kernel | norms | nebenhulle")
      ->required()
      ->check(CLI::IsMember({"certify", "select", "kernel", "norms", "nebenhulle"}));
  app.add_option("--config", config_path, "config file")->required();
  app.add_option("--out", out_dir, "output directory");
  auto* seed_opt = app.add_option("--seed", seed, "overrides [run] seed");
  app.add_option("--threads", threads, "OpenMP threads")->envname("WORM3_THREADS");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : worm3::kExitConfigError;
  }

  worm3::RunConfig cfg;
  try {
    cfg = worm3::load_config(config_path);
  } catch (const worm3::Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return worm3::kExitConfigError;
  }
  if (*seed_opt) cfg.seed = seed;
  if (threads > 0) cfg.threads = threads;
  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);

  const auto r = worm3::run_command(command, cfg, out_dir);
  for (const auto& f : r.files) std::cout << "wrote " << f << "\n";
  (r.exit_code == 0 ? std::cout : std::cerr) << r.message << "\n";
  return r.exit_code;
}
