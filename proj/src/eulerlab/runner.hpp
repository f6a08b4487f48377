#pragma once

// Run configuration (flat key=value), the command pipeline behind the CLI,
// and report/CSV emission.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eulerlab/calculus.hpp"
#include "eulerlab/exact_solutions.hpp"
#include "eulerlab/simulator.hpp"

namespace eulerlab {

const char* library_version() noexcept;

enum class Command { Verify, Derive, Trace, Simulate, Diagnose, All };
const char* to_string(Command c) noexcept;
Command parse_command(const std::string& text);

struct ConfigKey {
  const char* name;
  const char* help;
};
// Every key accepted by RunConfig::set, in documentation order.
const std::vector<ConfigKey>& config_keys();

struct RunConfig {
  SolutionParams params;
  AnnulusGrid grid;                 // sampling region, simulation grid, diagnostics region
  SimConfig sim;
  std::optional<double> t_end;      // default 0.5 * t_star
  DiffConfig diff;
  double tol = 1e-10;
  int samples = 1000;
  std::uint64_t seed = 1;
  std::string output_dir;           // empty: nothing written
  double sim_tol = 0.01;            // relative L-infinity bound for `simulate`
  double trace_r0 = 1.0;
  double trace_z0 = 1.0;
  double trace_dt = 1e-3;
  std::string derive_preset = "euler-selfsimilar";
  std::string derive_a;             // empty: a stays symbolic

  // Raises Config for unknown keys or malformed values.
  void set(const std::string& key, const std::string& value);
  // Lines `key = value`; '#' starts a comment; blank lines ignored.
  void load_file(const std::string& path);
  void load_text(const std::string& text);

  double resolved_t_end() const { return t_end ? *t_end : 0.5 * params.t_star; }
  void validate() const;
  nlohmann::json to_json() const;
};

struct RunResult {
  bool pass = false;
  nlohmann::json report;
  std::string summary;               // human-readable lines
  std::vector<std::string> files;    // written artifacts
};

// Runs one command. Parameter and configuration problems raise Error; failed
// checks are reported through RunResult::pass.
RunResult run(const RunConfig& config, Command command);

}  // namespace eulerlab
