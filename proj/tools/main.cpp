// susyprop: complex SUSY-partner potentials and their exact propagators.
//
// Subcommands:
//   potential   sample Re/Im of the partner potential onto a grid (CSV)
//   propagator  evaluate K(x,y,t) on a lattice by the requested methods (CSV)
//   evolve      propagate a packet by every method incl. the CN oracle (CSV)
//   verify      run the cross-validation suite, emit a JSON report

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "susyprop/scenario.hpp"
#include "susyprop/types.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact propagators for complex SUSY partners of solvable potentials"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags are accepted after the subcommand too

  std::string config_path;
  std::string out_path;
  std::string example;
  int threads = -1;
  long long seed = -1;
  app.add_option("--config", config_path, "scenario config file (JSON)");
  app.add_option("--out", out_path, "output file path");
  app.add_option("--example", example, "oscillator|soliton (when no config file)");
  app.add_option("--threads", threads, "worker threads (0 = hardware)");
  app.add_option("--seed", seed, "seed for randomized property checks");

  auto* cmd_pot = app.add_subcommand("potential", "sample the partner potential");
  auto* cmd_prop = app.add_subcommand("propagator", "evaluate propagator lattice");
  auto* cmd_evo = app.add_subcommand("evolve", "propagate an initial packet");
  auto* cmd_ver = app.add_subcommand("verify", "run the verification suite");
  std::string filter;
  cmd_ver->add_option("--filter", filter, "run only checks whose name contains this");

  CLI11_PARSE(app, argc, argv);

  try {
    susyprop::ScenarioConfig cfg;
    if (!config_path.empty()) cfg = susyprop::load_config(config_path);
    if (!example.empty()) cfg.example = example;
    if (threads >= 0) cfg.threads = threads;
    if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);

    if (cmd_ver->parsed()) return susyprop::cmd_verify(cfg, filter, out_path);

    if (out_path.empty()) {
      std::fprintf(stderr, "error: --out is required for this subcommand\n");
      return 2;
    }
    if (cmd_pot->parsed()) return susyprop::cmd_potential(cfg, out_path);
    if (cmd_prop->parsed()) return susyprop::cmd_propagator(cfg, out_path);
    if (cmd_evo->parsed()) return susyprop::cmd_evolve(cfg, out_path);
  } catch (const susyprop::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
