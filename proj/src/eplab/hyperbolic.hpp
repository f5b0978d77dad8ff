#pragma once

#include <functional>
#include <optional>
#include <span>

#include "eplab/eos.hpp"
#include "eplab/mesh.hpp"
#include "eplab/poisson.hpp"

namespace eplab {

enum class SystemKind { bep, ae, euler };

struct SchemeConfig {
  double cfl = 0.45;
  double density_floor = 1e-12;
  double end_time = 0.2;
  int output_stride = 1;
};

struct StepReport {
  double dt = 0.0;
  double max_wave_speed_ion = 0.0;
  double max_wave_speed_electron = 0.0;
  int floored_cells = 0;
  bool oscillation_bound_active = false;
};

struct FluxPair {
  double mass = 0.0;
  double momentum = 0.0;
};

// Local Lax-Friedrichs numerical flux for the isentropic system
// (rho, m) with the given pressure law. Wave speed bound
// max(|u_l| + c_l, |u_r| + c_r) with c = sqrt(P').
FluxPair rusanov_flux(double rho_l, double m_l, double rho_r, double m_r,
                      const EosSpec& eos);

// Single-species Euler state in conserved variables.
struct EulerState {
  Field rho;
  Field m;
  double time = 0.0;
};

// Ion state plus the electron density slaved to it through the
// nonlinear elliptic relation; n is kept consistent with rho after
// every step.
struct AeState {
  Field rho;
  Field m;
  Field n;
  double time = 0.0;
};

// Optional forcing hooks, used by the manufactured-solution runs. The
// callable receives the stage time and returns per-cell source arrays.
struct EulerSourceArrays {
  Field rho;
  Field m;
};
using EulerSourceFn = std::function<EulerSourceArrays(double t)>;

struct BepSourceArrays {
  Field rho_i;
  Field m_i;
  Field rho_e;
  Field m_e;
};
using BepSourceFn = std::function<BepSourceArrays(double t)>;

// Stable timestep for the two-species run: ion CFL, electron CFL with
// the 1/sqrt(eps) stiffened sound speed, and the plasma-oscillation
// resolution bound sqrt(eps * delta / max density).
double compute_dt(const Mesh1D& mesh, const PlasmaState& state,
                  const SchemeConfig& cfg, const EosSpec& eos1,
                  const EosSpec& eos2, bool* oscillation_bound_active = nullptr);

double compute_dt_euler(const Mesh1D& mesh, const EulerState& state,
                        const SchemeConfig& cfg, const EosSpec& eos1,
                        const EosSpec& eos2);

double compute_dt_ae(const Mesh1D& mesh, const AeState& state,
                     const SchemeConfig& cfg, const EosSpec& eos1,
                     const EosSpec& eos2);

// One Heun (SSP-RK2) step each. Wall boundaries enter through mirror
// ghosts with reflected momentum, which zeroes the wall mass flux
// exactly.
StepReport step_euler(const Mesh1D& mesh, EulerState& state, double dt,
                      const SchemeConfig& cfg, const EosSpec& eos1,
                      const EosSpec& eos2,
                      const EulerSourceFn* src = nullptr);

StepReport step_ae(const Mesh1D& mesh, AeState& state, double dt, double delta,
                   const SchemeConfig& cfg, const EosSpec& eos1,
                   const EosSpec& eos2, const EulerSourceFn* src = nullptr);

StepReport step_bep(const Mesh1D& mesh, PlasmaState& state, double dt,
                    const SchemeConfig& cfg, const EosSpec& eos1,
                    const EosSpec& eos2, const BepSourceFn* src = nullptr);

// Aborts a run once the density floor has been active on more than 1%
// of the cells for over 10 consecutive steps.
struct VacuumGuard {
  int consecutive = 0;
  void update(int floored_cells, int ncells);
};

// Advance to t_target exactly. The final stretch is split into equal
// substeps so the backward differences taken by the lifts never see a
// degenerate last step.
void integrate_euler_to(const Mesh1D& mesh, EulerState& state, double t_target,
                        const SchemeConfig& cfg, const EosSpec& eos1,
                        const EosSpec& eos2, const EulerSourceFn* src = nullptr,
                        EulerState* prev1 = nullptr, EulerState* prev2 = nullptr);

void integrate_ae_to(const Mesh1D& mesh, AeState& state, double t_target,
                     double delta, const SchemeConfig& cfg, const EosSpec& eos1,
                     const EosSpec& eos2, const EulerSourceFn* src = nullptr,
                     AeState* prev1 = nullptr, AeState* prev2 = nullptr);

void integrate_bep_to(const Mesh1D& mesh, PlasmaState& state, double t_target,
                      const SchemeConfig& cfg, const EosSpec& eos1,
                      const EosSpec& eos2, const BepSourceFn* src = nullptr);

}  // namespace eplab
