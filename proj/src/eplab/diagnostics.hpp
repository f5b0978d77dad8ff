#pragma once

#include <vector>

#include "eplab/eos.hpp"
#include "eplab/hyperbolic.hpp"
#include "eplab/mesh.hpp"

namespace eplab {

struct EnergyBreakdown {
  double kin_ion = 0.0;
  double int_ion = 0.0;
  double kin_ele = 0.0;
  double int_ele = 0.0;
  double field = 0.0;
  double total = 0.0;
};

// Discrete total energies of the three systems. The field term always
// uses the cell-centered gradient of the stored potential, so states
// that agree cellwise produce identical numbers across systems.
EnergyBreakdown total_energy_bep(const Mesh1D& mesh, const PlasmaState& state,
                                 const EosSpec& eos1, const EosSpec& eos2,
                                 double floor);
EnergyBreakdown total_energy_ae(const Mesh1D& mesh, const AeState& state,
                                double delta, const EosSpec& eos1,
                                const EosSpec& eos2, double floor);
EnergyBreakdown total_energy_euler(const Mesh1D& mesh, const EulerState& state,
                                   const EosSpec& eos1, const EosSpec& eos2,
                                   double floor);

// Lift of an adiabatic-electron solution to full two-species reference
// fields. Needs two consecutive states of the same run: the time
// derivative of the lifted potential is a backward difference over the
// solver's own step.
LiftedReference lift_ae_solution(const Mesh1D& mesh, const AeState& prev,
                                 const AeState& curr, double delta,
                                 const EosSpec& eos2, double floor);

// Lift of a plain Euler solution: both species share the density and
// velocity, and the potential is H2'(rho).
LiftedReference lift_euler_solution(const Mesh1D& mesh,
                                    const EulerState& state,
                                    const EosSpec& eos2, double floor);

struct RelEnergyBreakdown {
  double rk_ion = 0.0;  // 1/2 rho |u - ubar|^2
  double ri_ion = 0.0;  // H1(rho | rhobar)
  double rk_ele = 0.0;  // eps/2 n |v - vbar|^2
  double ri_ele = 0.0;  // H2(n | nbar)
  double field = 0.0;   // delta/2 |grad(phi - phibar)|^2
  double total = 0.0;
};

// Modulated relative energy between a two-species state and a lifted
// reference; zero exactly when the state equals the reference cellwise.
RelEnergyBreakdown relative_energy(const Mesh1D& mesh, const PlasmaState& state,
                                   const LiftedReference& ref,
                                   const EosSpec& eos1, const EosSpec& eos2,
                                   double floor);

struct SigmaTerms {
  double sigma1 = 0.0;      // - rho ubar' (u-ubar)^2 - eps n vbar' (v-vbar)^2
  double sigma2 = 0.0;      // - ubar' P1(rho|rhobar) - vbar' P2(n|nbar)
  double sigma_star = 0.0;  // ((rho-rhobar) ubar - (n-nbar) vbar) (phi-phibar)'
};

SigmaTerms sigma_terms(const Mesh1D& mesh, const PlasmaState& state,
                       const LiftedReference& ref, const EosSpec& eos1,
                       const EosSpec& eos2, double floor);

// - int eps (n/nbar) ebar (v - vbar) dx, the forcing term carrying the
// reference acceleration error.
double sigma3_term(const Mesh1D& mesh, const PlasmaState& state,
                   const LiftedReference& ref, std::span<const double> ebar,
                   double floor);

struct ApproxResidual {
  Field ebar;        // nbar (dt vbar + vbar vbar')
  Field ebar0;       // -Lap phibar (Euler lift only)
  bool has_ebar0 = false;
  double sup_ebar = 0.0;
  double l1_ebar = 0.0;
  double sup_ebar0 = 0.0;
};

// Acceleration residual of the lifted reference fields, from two
// consecutive lifts of the same run.
ApproxResidual approx_residual(const Mesh1D& mesh, const LiftedReference& prev,
                               const LiftedReference& curr, bool euler_lift);

struct RelEnergySample {
  double t = 0.0;
  RelEnergyBreakdown h;
  double sig1 = 0.0, sig2 = 0.0, sig3 = 0.0, sigstar = 0.0;
};

struct RelEnergySeries {
  std::vector<RelEnergySample> samples;
};

// Signed residuals (dPhi/dt minus the trapezoid of the sigma sum) per
// sample interval. Positive values mean the relative energy grew faster
// than the identity allows.
std::vector<double> releng_identity_residual(const RelEnergySeries& series);

struct DissipationCheck {
  bool passed = false;
  double max_uphill = 0.0;  // largest single-step energy increase
  double tol = 0.0;
};

// Per-step tolerance 1e-10 E(0) + E(0) dx dt: rounding slack plus one
// unit of first-order drift.
DissipationCheck check_energy_dissipation(std::span<const double> energies,
                                          double dx, double dt_typical);

struct LeadingOrderReport {
  double elliptic_residual = 0.0;   // sup | -delta Lap H2'(n0) + n0 - rho0 |
  double continuity_defect = 0.0;   // max over samples of int |dt n0 + div mu0|
  double energy_drift = 0.0;        // max |E(t) - E(0)| of the limit energy
  double mu_minus_m = 0.0;          // sup |mu0 - m0|, exactly 0 when delta = 0
};

// Consistency of the leading-order closure along a recorded
// adiabatic-electron run (at least two samples).
LeadingOrderReport leading_order_check(const Mesh1D& mesh,
                                       const std::vector<AeState>& history,
                                       double delta, const EosSpec& eos1,
                                       const EosSpec& eos2, double floor);

}  // namespace eplab
