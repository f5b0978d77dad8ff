#pragma once

#include <span>
#include <vector>

#include "eplab/errors.hpp"

namespace eplab {

using Field = std::vector<double>;

// Uniform cell-centered grid on [0, length]. Cell j owns the interval
// [j dx, (j+1) dx] and carries its value at the midpoint.
struct Mesh1D {
  double length = 1.0;
  int ncells = 0;
  double dx = 0.0;

  static Mesh1D uniform(double length, int ncells);
  double center(int j) const { return (static_cast<double>(j) + 0.5) * dx; }
};

// Central differences. Boundary cells use a mirror ghost (even
// reflection across the wall), so the gradient of a constant vanishes
// identically. Intended for scalar fields that satisfy a homogeneous
// Neumann condition at the walls.
Field gradient(const Mesh1D& mesh, std::span<const double> f);

// Central differences with an odd reflection at the walls, for flux-like
// fields whose normal component vanishes there (momenta, velocities).
// With that closure the midpoint integral of the result telescopes to
// zero for every input.
Field divergence(const Mesh1D& mesh, std::span<const double> f);

// Midpoint rule.
double integrate(const Mesh1D& mesh, std::span<const double> f);

// One species in conserved variables.
struct SpeciesState {
  Field density;
  Field momentum;
};

struct VelocityRecovery {
  Field velocity;
  int floored_cells = 0;  // cells where the density floor kicked in
};

// velocity = momentum / max(density, floor).
VelocityRecovery primitive_from_conserved(const SpeciesState& s, double floor);

// Full two-species state with the self-consistent potential.
struct PlasmaState {
  SpeciesState ion;
  SpeciesState electron;
  Field phi;
  double eps = 1.0;
  double delta = 1.0;
  double time = 0.0;
};

// Reference fields lifted from a limit-system solution, with the cached
// time derivative of the lifted potential (backward difference over the
// reference solver's own step).
struct LiftedReference {
  Field rhobar;
  Field ubar;
  Field nbar;
  Field vbar;
  Field phibar;
  Field dphibar_dt;
  double time = 0.0;
  double dt_bar = 0.0;            // separation used for the time derivative
  double continuity_defect = 0.0; // L1 norm of the lifted electron continuity residual
};

void require_length(std::span<const double> f, int ncells, const char* what);

}  // namespace eplab
