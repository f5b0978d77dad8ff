#pragma once

#include <vector>

#include "eplab/diagnostics.hpp"
#include "eplab/eos.hpp"
#include "eplab/hyperbolic.hpp"
#include "eplab/mesh.hpp"

namespace eplab {

// Physical inputs for the dimensionless groups. Constants default to SI.
struct ScalingInputs {
  double ion_mass = 0.0;        // kg
  double electron_mass = 0.0;   // kg
  double temperature = 0.0;     // K
  double density = 0.0;         // m^-3
  double length = 0.0;          // m
  double time = 0.0;            // s
  double k_boltzmann = 1.380649e-23;
  double elementary_charge = 1.602176634e-19;
  double vacuum_permittivity = 8.8541878128e-12;
};

struct ScalingGroups {
  double zeta = 0.0;   // ion inertia vs thermal pressure
  double eps = 0.0;    // electron-to-ion mass ratio group
  double delta = 0.0;  // squared Debye length over domain length
};

ScalingGroups nondimensionalize(const ScalingInputs& in);

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  bool valid = false;
};

// Least-squares slope of log(y) against log(x). Requires positive data;
// a single point yields valid = false.
RateFit fit_rate(const std::vector<double>& xs, const std::vector<double>& ys);

// Two-fluid initial data prepared so the distance to the limit solution
// starts at the (eps + delta)^2 level rather than O(1).
struct WellPrepared {
  PlasmaState bep;
  EulerState euler;
  AeState ae;
  LiftedReference ref0;  // limit-state lift at t = 0 used to build the data
  double phi0 = 0.0;     // relative energy of bep against ref0
};

WellPrepared well_prepared_init(const Mesh1D& mesh, double eps, double delta,
                                const EosSpec& eos1, const EosSpec& eos2,
                                double amplitude, double density_floor = 1e-12);

struct SweepConfig {
  int ncells = 400;
  double length = 1.0;
  double t_end = 0.2;
  double amplitude = 0.05;
  double cfl = 0.45;
  double density_floor = 1e-12;
  int nsamples = 20;  // sampling instants after t = 0
  int nworkers = 0;   // 0 = hardware concurrency
  EosSpec eos1{};
  EosSpec eos2{};
};

struct SweepEntry {
  double eps = 0.0;
  double delta = 0.0;
  int ncells = 0;
  double phi0 = 0.0;            // relative energy at t = 0
  double phi_sup = 0.0;         // sup over samples
  double c_run = 0.0;           // smallest Gronwall rate covering the run
  bool gronwall_ok = false;     // sup bounded by exp(c_run T)(phi0 + eps + delta)
  double wall_seconds = 0.0;    // informational only, never written to files
  RelEnergySeries series;
};

struct SweepResult {
  std::vector<SweepEntry> entries;
  RateFit fit;
  bool monotone = false;  // phi_sup non-increasing (10% slack) as eps shrinks
};

// One full comparison of the two-fluid run against its limit system.
// kind selects the reference: ae for the electron-mass limit (delta fixed),
// euler for the joint limit (eps = delta).
SweepEntry run_limit_comparison(SystemKind reference, double eps, double delta,
                                const SweepConfig& cfg);

// eps descending, delta = 1, adiabatic-electron reference. Rate fitted
// against eps.
SweepResult run_zem_sweep(const std::vector<double>& eps_list,
                          const SweepConfig& cfg);

// eps = delta descending, Euler reference. Rate fitted against eps + delta.
SweepResult run_joint_sweep(const std::vector<double>& eps_list,
                            const SweepConfig& cfg);

}  // namespace eplab
