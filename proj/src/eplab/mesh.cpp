#include "eplab/mesh.hpp"

#include <cmath>
#include <string>

namespace eplab {

void require_length(std::span<const double> f, int ncells, const char* what) {
  if (static_cast<int>(f.size()) != ncells)
    throw DomainError(std::string(what) + ": expected " +
                      std::to_string(ncells) + " cells, got " +
                      std::to_string(f.size()));
}

Mesh1D Mesh1D::uniform(double length, int ncells) {
  if (!(length > 0.0))
    throw DomainError("Mesh1D: length must be positive");
  if (ncells < 2)
    throw DomainError("Mesh1D: need at least 2 cells");
  Mesh1D m;
  m.length = length;
  m.ncells = ncells;
  m.dx = length / ncells;
  return m;
}

Field gradient(const Mesh1D& mesh, std::span<const double> f) {
  require_length(f, mesh.ncells, "gradient");
  const int n = mesh.ncells;
  Field g(n);
  const double inv2dx = 1.0 / (2.0 * mesh.dx);
  for (int j = 0; j < n; ++j) {
    const double left = (j == 0) ? f[0] : f[j - 1];
    const double right = (j == n - 1) ? f[n - 1] : f[j + 1];
    g[j] = (right - left) * inv2dx;
  }
  return g;
}

Field divergence(const Mesh1D& mesh, std::span<const double> f) {
  require_length(f, mesh.ncells, "divergence");
  const int n = mesh.ncells;
  Field g(n);
  const double inv2dx = 1.0 / (2.0 * mesh.dx);
  for (int j = 0; j < n; ++j) {
    const double left = (j == 0) ? -f[0] : f[j - 1];
    const double right = (j == n - 1) ? -f[n - 1] : f[j + 1];
    g[j] = (right - left) * inv2dx;
  }
  return g;
}

double integrate(const Mesh1D& mesh, std::span<const double> f) {
  require_length(f, mesh.ncells, "integrate");
  double sum = 0.0;
  for (double v : f) sum += v;
  return sum * mesh.dx;
}

VelocityRecovery primitive_from_conserved(const SpeciesState& s, double floor) {
  if (s.density.size() != s.momentum.size())
    throw DomainError("primitive_from_conserved: density/momentum length mismatch");
  if (!(floor > 0.0))
    throw DomainError("primitive_from_conserved: floor must be positive");
  VelocityRecovery out;
  out.velocity.resize(s.density.size());
  for (size_t j = 0; j < s.density.size(); ++j) {
    double r = s.density[j];
    if (r < floor) {
      r = floor;
      ++out.floored_cells;
    }
    out.velocity[j] = s.momentum[j] / r;
  }
  return out;
}

}  // namespace eplab
