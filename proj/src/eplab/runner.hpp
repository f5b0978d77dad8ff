#pragma once

#include <string>
#include <vector>

#include "eplab/config.hpp"
#include "eplab/experiments.hpp"

namespace eplab {

struct RunReport {
  long steps = 0;
  double final_time = 0.0;
  std::vector<std::string> files;
};

// Integrates the configured system from well-prepared data to t_end and
// writes fields_initial.csv, fields_final.csv and energy.csv into the
// configured output directory.
RunReport run_simulation(const RunConfig& cfg);

struct SweepRunReport {
  SweepResult result;
  std::vector<std::string> files;
  std::string summary;
};

// limit is "zem" (eps sweep against the adiabatic-electron reference,
// delta = 1) or "joint" (eps = delta against the Euler reference).
// Writes the sweep CSV plus one relative-energy series CSV per entry.
SweepRunReport run_sweep_command(const RunConfig& cfg,
                                 const std::string& limit);

// Default parameter list used by the sweep command.
std::vector<double> default_sweep_eps();

}  // namespace eplab
