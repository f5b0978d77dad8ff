#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eplab/eos.hpp"
#include "eplab/hyperbolic.hpp"

namespace eplab {

// Flat key = value run configuration. Every key maps to one model
// symbol or scheme knob; see the README table.
struct RunConfig {
  SystemKind system = SystemKind::bep;
  double eps = 1.0;
  double delta = 1.0;
  double gamma1 = 2.0;
  double k1 = 1.0;
  double gamma2 = 2.0;
  double k2 = 1.0;
  double length = 1.0;
  int ncells = 200;
  double cfl = 0.45;
  double t_end = 0.2;
  double amplitude = 0.05;
  std::string output_dir = "out";
  long seed = 12345;

  EosSpec ion_eos() const { return EosSpec{gamma1, k1}; }
  EosSpec electron_eos() const { return EosSpec{gamma2, k2}; }
  SchemeConfig scheme() const;

  // Canonical ordered echo of every key, numbers at full precision.
  std::vector<std::pair<std::string, std::string>> resolved() const;
};

const char* system_name(SystemKind kind);

// Parses key = value lines ('#' starts a comment). The 'system' key is
// required; everything else falls back to the documented default.
// Throws ConfigError carrying every violation found, not just the first.
RunConfig parse_config(const std::string& text);

RunConfig parse_config_file(const std::string& path);

// Applies one key = value override to an existing config and
// revalidates. Same error contract as parse_config.
void apply_override(RunConfig& cfg, const std::string& key,
                    const std::string& value);

}  // namespace eplab
