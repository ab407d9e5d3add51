#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "susyprop/kernel.hpp"
#include "susyprop/quadrature.hpp"
#include "susyprop/susy.hpp"
#include "susyprop/types.hpp"

namespace susyprop {

struct PacketSpec {
  std::string kind = "gaussian";  // or "bound_state"
  double center = 0.0;
  double width = 1.0;
  double momentum = 0.0;
};

// Mirrors the flat sections of the JSON config file; command-line flags
// override individual fields after loading.
struct ScenarioConfig {
  std::string example = "oscillator";  // or "soliton"
  Complex C{0.0, 2.0};                 // oscillator parameter, Im C != 0
  double a = 1.0, b = 2.0;             // soliton parameters

  // sampling grid for `potential`
  double grid_x_min = -8.0, grid_x_max = 8.0;
  int grid_n = 321;

  // evaluation lattice for `propagator`
  std::vector<double> xs{-2.0, -1.0, 0.0, 1.0, 2.0};
  std::vector<double> ys{-2.0, -1.0, 0.0, 1.0, 2.0};
  std::vector<double> ts{0.5};
  std::vector<KernelMethod> methods{KernelMethod::TheoremQuad, KernelMethod::ClosedForm};
  int spectral_terms = 64;

  QuadratureSpec quad;

  // `evolve` section
  double evo_x_min = -15.0, evo_x_max = 15.0;
  int evo_n = 601;
  double evo_dt = 1e-3;
  double evo_t = 0.7;
  PacketSpec packet{"gaussian", 1.0, 1.0, 0.0};
  double boundary_cap = 1e-6;

  // `verify` section
  std::string verify_filter;
  std::map<std::string, double> tolerance_overrides;

  int threads = 0;
  std::uint64_t seed = 12345;

  std::string config_digest = "builtin-defaults";
};

// Parses and validates a JSON config file; throws ConfigError with
// position/field diagnostics on malformed input.
ScenarioConfig load_config(const std::string& path);

PartnerModel partner_from(const ScenarioConfig& cfg);

// Dataset builders return the complete file contents; nothing touches the
// filesystem until a build has succeeded, so failed runs leave no partial
// files.  Reals are printed with 17 significant digits and round-trip
// bit-exactly.
std::string potential_csv(const ScenarioConfig& cfg);
std::string propagator_csv(const ScenarioConfig& cfg);

struct EvolveOutput {
  std::string csv;
  std::string summary_json;  // pairwise L2 discrepancies between methods
};
EvolveOutput build_evolve(const ScenarioConfig& cfg);

std::string verify_report_json(const ScenarioConfig& cfg, const std::string& filter,
                               bool& all_pass);

void write_file(const std::string& path, const std::string& contents);

// Subcommand drivers used by the CLI; return process exit codes.
int cmd_potential(const ScenarioConfig& cfg, const std::string& out_path);
int cmd_propagator(const ScenarioConfig& cfg, const std::string& out_path);
int cmd_evolve(const ScenarioConfig& cfg, const std::string& out_path);
int cmd_verify(const ScenarioConfig& cfg, const std::string& filter,
               const std::string& out_path);

}  // namespace susyprop
