#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eplab/diagnostics.hpp"
#include "eplab/experiments.hpp"
#include "eplab/mesh.hpp"

namespace eplab {

using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

std::string format_g17(double v);

void ensure_directory(const std::string& path);

// All writers start the file with '# key = value' lines echoing the
// resolved configuration, then a column-name row, then data rows with
// 17 significant digits. Throws IoError on failure.

void write_field_csv(const std::string& path, const ConfigEcho& echo,
                     const Mesh1D& mesh, const Field& rho, const Field& u,
                     const Field& n, const Field& v, const Field& phi);

struct EnergySample {
  double t = 0.0;
  EnergyBreakdown e;
};

void write_energy_csv(const std::string& path, const ConfigEcho& echo,
                      const std::vector<EnergySample>& samples);

void write_releng_csv(const std::string& path, const ConfigEcho& echo,
                      const RelEnergySeries& series);

void write_sweep_csv(const std::string& path, const ConfigEcho& echo,
                     const SweepResult& result);

}  // namespace eplab
