#include "eplab/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace eplab {

namespace {

constexpr double kDtCollapse = 1e-14;

// Per-cell primitive data entering the flux kernel.
struct CellData {
  Field u, p, c;
  int floored = 0;
};

// u from floored division; p and c from the nonnegative part of the
// density so that transient undershoots do not poison the EOS.
CellData primitives_single(std::span<const double> rho,
                           std::span<const double> m, const EosSpec& eos,
                           double floor) {
  const size_t n = rho.size();
  CellData out;
  out.u.resize(n);
  out.p.resize(n);
  out.c.resize(n);
  for (size_t j = 0; j < n; ++j) {
    double r = rho[j];
    if (r < floor) ++out.floored;
    out.u[j] = m[j] / std::max(r, floor);
    const double rpos = std::max(r, 0.0);
    out.p[j] = pressure(eos, rpos);
    out.c[j] = sound_speed(eos, rpos);
  }
  return out;
}

// Combined two-pressure variant: P1(rho) + P2(aux) with the matching
// sound speed bound. Both the Euler stepper (aux = rho) and the
// adiabatic-electron stepper (aux = n) go through this one code path,
// which is what makes the delta = 0 collapse exact.
CellData primitives_combined(std::span<const double> rho,
                             std::span<const double> m,
                             std::span<const double> aux, const EosSpec& eos1,
                             const EosSpec& eos2, double floor) {
  const size_t n = rho.size();
  CellData out;
  out.u.resize(n);
  out.p.resize(n);
  out.c.resize(n);
  for (size_t j = 0; j < n; ++j) {
    double r = rho[j];
    if (r < floor) ++out.floored;
    out.u[j] = m[j] / std::max(r, floor);
    const double rpos = std::max(r, 0.0);
    const double apos = std::max(aux[j], 0.0);
    out.p[j] = pressure(eos1, rpos) + pressure(eos2, apos);
    double dp = 0.0;
    if (rpos > 0.0) dp += pressure_prime(eos1, rpos);
    if (apos > 0.0) dp += pressure_prime(eos2, apos);
    out.c[j] = std::sqrt(dp);
  }
  return out;
}

// Ion variant: the flux carries P1(rho) only, but once the field couples
// the species, ion disturbances propagate at the ion-acoustic speed
// sqrt(P1'(rho) + P2'(n)), so the dissipation speed bound uses it. This
// also keeps the ion viscosity aligned with the combined-pressure limit
// stepper instead of leaving an O(dx) gap between the two.
CellData primitives_ion_acoustic(std::span<const double> rho,
                                 std::span<const double> m,
                                 std::span<const double> ne,
                                 const EosSpec& eos1, const EosSpec& eos2,
                                 double floor) {
  const size_t n = rho.size();
  CellData out;
  out.u.resize(n);
  out.p.resize(n);
  out.c.resize(n);
  for (size_t j = 0; j < n; ++j) {
    double r = rho[j];
    if (r < floor) ++out.floored;
    out.u[j] = m[j] / std::max(r, floor);
    const double rpos = std::max(r, 0.0);
    const double npos = std::max(ne[j], 0.0);
    out.p[j] = pressure(eos1, rpos);
    double dp = 0.0;
    if (rpos > 0.0) dp += pressure_prime(eos1, rpos);
    if (npos > 0.0) dp += pressure_prime(eos2, npos);
    out.c[j] = std::sqrt(dp);
  }
  return out;
}

FluxPair rusanov_kernel(double rho_l, double m_l, double u_l, double p_l,
                        double c_l, double rho_r, double m_r, double u_r,
                        double p_r, double c_r) {
  const double s = std::max(std::abs(u_l) + c_l, std::abs(u_r) + c_r);
  FluxPair f;
  f.mass = 0.5 * (m_l + m_r) - 0.5 * s * (rho_r - rho_l);
  f.momentum = 0.5 * (m_l * u_l + p_l + m_r * u_r + p_r) - 0.5 * s * (m_r - m_l);
  return f;
}

// Conservative flux-difference update for one species. Wall interfaces
// use the reflected ghost, whose mass flux is identically zero;
// the wall momentum flux reduces to m u + p -/+ s m.
struct FluxUpdate {
  Field rho, m;
  double max_speed = 0.0;
};

FluxUpdate flux_update(const Mesh1D& mesh, std::span<const double> rho,
                       std::span<const double> m, const CellData& cd,
                       double dt) {
  const int n = mesh.ncells;
  const double lam = dt / mesh.dx;
  FluxUpdate out;
  out.rho.resize(n);
  out.m.resize(n);

  Field fmass(n + 1), fmom(n + 1);
  for (int i = 1; i < n; ++i) {
    const int l = i - 1, r = i;
    const FluxPair f =
        rusanov_kernel(rho[l], m[l], cd.u[l], cd.p[l], cd.c[l], rho[r], m[r],
                       cd.u[r], cd.p[r], cd.c[r]);
    fmass[i] = f.mass;
    fmom[i] = f.momentum;
    out.max_speed = std::max(
        out.max_speed,
        std::max(std::abs(cd.u[l]) + cd.c[l], std::abs(cd.u[r]) + cd.c[r]));
  }
  {
    const double s = std::abs(cd.u[0]) + cd.c[0];
    fmass[0] = 0.0;
    fmom[0] = m[0] * cd.u[0] + cd.p[0] - s * m[0];
    out.max_speed = std::max(out.max_speed, s);
  }
  {
    const int l = n - 1;
    const double s = std::abs(cd.u[l]) + cd.c[l];
    fmass[n] = 0.0;
    fmom[n] = m[l] * cd.u[l] + cd.p[l] + s * m[l];
    out.max_speed = std::max(out.max_speed, s);
  }

  for (int j = 0; j < n; ++j) {
    out.rho[j] = rho[j] - lam * (fmass[j + 1] - fmass[j]);
    out.m[j] = m[j] - lam * (fmom[j + 1] - fmom[j]);
  }
  return out;
}

double max_signal_combined(std::span<const double> rho,
                           std::span<const double> m,
                           std::span<const double> aux, const EosSpec& eos1,
                           const EosSpec& eos2, double floor) {
  double s = 0.0;
  for (size_t j = 0; j < rho.size(); ++j) {
    const double u = m[j] / std::max(rho[j], floor);
    const double rpos = std::max(rho[j], 0.0);
    const double apos = std::max(aux[j], 0.0);
    double dp = 0.0;
    if (rpos > 0.0) dp += pressure_prime(eos1, rpos);
    if (apos > 0.0) dp += pressure_prime(eos2, apos);
    s = std::max(s, std::abs(u) + std::sqrt(dp));
  }
  return s;
}

void check_dt(double dt) {
  if (!(dt > kDtCollapse))
    throw TimestepCollapseError("timestep collapsed to " + std::to_string(dt),
                                dt);
}

EosSpec scaled_electron_eos(const EosSpec& eos2, double eps) {
  return EosSpec{eos2.gamma, eos2.k / eps};
}

}  // namespace

FluxPair rusanov_flux(double rho_l, double m_l, double rho_r, double m_r,
                      const EosSpec& eos) {
  validate(eos);
  if (!(rho_l > 0.0) || !(rho_r > 0.0))
    throw DomainError("rusanov_flux: densities must be positive");
  const double u_l = m_l / rho_l;
  const double u_r = m_r / rho_r;
  return rusanov_kernel(rho_l, m_l, u_l, pressure(eos, rho_l),
                        sound_speed(eos, rho_l), rho_r, m_r, u_r,
                        pressure(eos, rho_r), sound_speed(eos, rho_r));
}

double compute_dt(const Mesh1D& mesh, const PlasmaState& state,
                  const SchemeConfig& cfg, const EosSpec& eos1,
                  const EosSpec& eos2, bool* oscillation_bound_active) {
  require_length(state.ion.density, mesh.ncells, "compute_dt ion");
  require_length(state.electron.density, mesh.ncells, "compute_dt electron");
  const EosSpec eos2s = scaled_electron_eos(eos2, state.eps);

  double s_ion = 0.0, s_ele = 0.0, dens_max = 0.0;
  for (int j = 0; j < mesh.ncells; ++j) {
    const double r = state.ion.density[j];
    const double ne = state.electron.density[j];
    const double u = state.ion.momentum[j] / std::max(r, cfg.density_floor);
    const double v =
        state.electron.momentum[j] / std::max(ne, cfg.density_floor);
    // Same ion-acoustic bound the ion flux dissipates with.
    double dp = 0.0;
    if (r > 0.0) dp += pressure_prime(eos1, r);
    if (ne > 0.0) dp += pressure_prime(eos2, ne);
    s_ion = std::max(s_ion, std::abs(u) + std::sqrt(dp));
    s_ele =
        std::max(s_ele, std::abs(v) + sound_speed(eos2s, std::max(ne, 0.0)));
    dens_max = std::max(dens_max, std::max(r, ne));
  }
  dens_max = std::max(dens_max, cfg.density_floor);

  const double dt_ion = s_ion > 0.0 ? mesh.dx / s_ion
                                    : std::numeric_limits<double>::infinity();
  const double dt_ele = s_ele > 0.0 ? mesh.dx / s_ele
                                    : std::numeric_limits<double>::infinity();
  const double dt_osc = std::sqrt(state.eps * state.delta / dens_max);

  const double dt = cfg.cfl * std::min({dt_ion, dt_ele, dt_osc});
  if (oscillation_bound_active)
    *oscillation_bound_active = dt_osc < std::min(dt_ion, dt_ele);
  check_dt(dt);
  return dt;
}

double compute_dt_euler(const Mesh1D& mesh, const EulerState& state,
                        const SchemeConfig& cfg, const EosSpec& eos1,
                        const EosSpec& eos2) {
  require_length(state.rho, mesh.ncells, "compute_dt_euler");
  const double s = max_signal_combined(state.rho, state.m, state.rho, eos1,
                                       eos2, cfg.density_floor);
  const double dt = s > 0.0 ? cfg.cfl * mesh.dx / s
                            : std::numeric_limits<double>::infinity();
  check_dt(dt);
  return dt;
}

double compute_dt_ae(const Mesh1D& mesh, const AeState& state,
                     const SchemeConfig& cfg, const EosSpec& eos1,
                     const EosSpec& eos2) {
  require_length(state.rho, mesh.ncells, "compute_dt_ae");
  const double s = max_signal_combined(state.rho, state.m, state.n, eos1, eos2,
                                       cfg.density_floor);
  const double dt = s > 0.0 ? cfg.cfl * mesh.dx / s
                            : std::numeric_limits<double>::infinity();
  check_dt(dt);
  return dt;
}

StepReport step_euler(const Mesh1D& mesh, EulerState& state, double dt,
                      const SchemeConfig& cfg, const EosSpec& eos1,
                      const EosSpec& eos2, const EulerSourceFn* src) {
  check_dt(dt);
  StepReport rep;
  rep.dt = dt;

  auto stage = [&](const Field& rho, const Field& m, double t, Field& rho_out,
                   Field& m_out, bool record) {
    const CellData cd =
        primitives_combined(rho, m, rho, eos1, eos2, cfg.density_floor);
    FluxUpdate up = flux_update(mesh, rho, m, cd, dt);
    if (src) {
      const EulerSourceArrays s = (*src)(t);
      for (int j = 0; j < mesh.ncells; ++j) {
        up.rho[j] += dt * s.rho[j];
        up.m[j] += dt * s.m[j];
      }
    }
    if (record) rep.max_wave_speed_ion = up.max_speed;
    rep.floored_cells += cd.floored;
    rho_out = std::move(up.rho);
    m_out = std::move(up.m);
  };

  Field rho1, m1, rho2, m2;
  stage(state.rho, state.m, state.time, rho1, m1, true);
  stage(rho1, m1, state.time + dt, rho2, m2, false);
  for (int j = 0; j < mesh.ncells; ++j) {
    state.rho[j] = 0.5 * (state.rho[j] + rho2[j]);
    state.m[j] = 0.5 * (state.m[j] + m2[j]);
  }
  state.time += dt;
  return rep;
}

StepReport step_ae(const Mesh1D& mesh, AeState& state, double dt, double delta,
                   const SchemeConfig& cfg, const EosSpec& eos1,
                   const EosSpec& eos2, const EulerSourceFn* src) {
  check_dt(dt);
  if (!(delta >= 0.0)) throw DomainError("step_ae: delta must be nonnegative");
  StepReport rep;
  rep.dt = dt;

  // Flux carries P1(rho) + P2(n); the remainder of the electron forcing
  // -rho (H2'(n))' appears as the source (n - rho) (H2'(n))', which
  // vanishes identically when delta = 0 and n == rho.
  auto stage = [&](const Field& rho, const Field& m, const Field& nfield,
                   double t, Field& rho_out, Field& m_out, Field& n_out,
                   bool record) {
    const CellData cd =
        primitives_combined(rho, m, nfield, eos1, eos2, cfg.density_floor);
    FluxUpdate up = flux_update(mesh, rho, m, cd, dt);
    if (src) {
      const EulerSourceArrays s = (*src)(t);
      for (int j = 0; j < mesh.ncells; ++j) {
        up.rho[j] += dt * s.rho[j];
        up.m[j] += dt * s.m[j];
      }
    }
    Field n_new = solve_ae_elliptic(mesh, up.rho, delta, eos2, nfield).n;
    Field w(mesh.ncells);
    for (int j = 0; j < mesh.ncells; ++j) w[j] = h_prime(eos2, n_new[j]);
    const Field gw = gradient(mesh, w);
    for (int j = 0; j < mesh.ncells; ++j)
      up.m[j] += dt * (n_new[j] - up.rho[j]) * gw[j];
    if (record) rep.max_wave_speed_ion = up.max_speed;
    rep.floored_cells += cd.floored;
    rho_out = std::move(up.rho);
    m_out = std::move(up.m);
    n_out = std::move(n_new);
  };

  Field rho1, m1, n1, rho2, m2, n2;
  stage(state.rho, state.m, state.n, state.time, rho1, m1, n1, true);
  stage(rho1, m1, n1, state.time + dt, rho2, m2, n2, false);
  for (int j = 0; j < mesh.ncells; ++j) {
    state.rho[j] = 0.5 * (state.rho[j] + rho2[j]);
    state.m[j] = 0.5 * (state.m[j] + m2[j]);
  }
  state.n = solve_ae_elliptic(mesh, state.rho, delta, eos2, n2).n;
  state.time += dt;
  return rep;
}

StepReport step_bep(const Mesh1D& mesh, PlasmaState& state, double dt,
                    const SchemeConfig& cfg, const EosSpec& eos1,
                    const EosSpec& eos2, const BepSourceFn* src) {
  check_dt(dt);
  if (!(state.eps > 0.0)) throw DomainError("step_bep: eps must be positive");
  if (!(state.delta > 0.0))
    throw DomainError("step_bep: delta must be positive");
  StepReport rep;
  rep.dt = dt;
  {
    bool osc = false;
    compute_dt(mesh, state, cfg, eos1, eos2, &osc);
    rep.oscillation_bound_active = osc;
  }
  const EosSpec eos2s = scaled_electron_eos(eos2, state.eps);
  const double inv_eps = 1.0 / state.eps;

  struct StageFields {
    Field rho, mi, ne, me, phi;
  };

  auto stage = [&](const Field& rho, const Field& mi, const Field& ne,
                   const Field& me, double t, bool record) -> StageFields {
    const CellData ion =
        primitives_ion_acoustic(rho, mi, ne, eos1, eos2, cfg.density_floor);
    const CellData ele = primitives_single(ne, me, eos2s, cfg.density_floor);
    FluxUpdate ui = flux_update(mesh, rho, mi, ion, dt);
    FluxUpdate ue = flux_update(mesh, ne, me, ele, dt);
    if (src) {
      const BepSourceArrays s = (*src)(t);
      for (int j = 0; j < mesh.ncells; ++j) {
        ui.rho[j] += dt * s.rho_i[j];
        ui.m[j] += dt * s.m_i[j];
        ue.rho[j] += dt * s.rho_e[j];
        ue.m[j] += dt * s.m_e[j];
      }
    }
    Field charge(mesh.ncells);
    for (int j = 0; j < mesh.ncells; ++j) charge[j] = ui.rho[j] - ue.rho[j];
    Field phi = solve_poisson(mesh, charge, state.delta).phi;
    const Field g = gradient(mesh, phi);
    for (int j = 0; j < mesh.ncells; ++j) {
      ui.m[j] -= dt * ui.rho[j] * g[j];
      ue.m[j] += dt * inv_eps * ue.rho[j] * g[j];
    }
    if (record) {
      rep.max_wave_speed_ion = ui.max_speed;
      rep.max_wave_speed_electron = ue.max_speed;
    }
    rep.floored_cells += ion.floored + ele.floored;
    return StageFields{std::move(ui.rho), std::move(ui.m), std::move(ue.rho),
                       std::move(ue.m), std::move(phi)};
  };

  StageFields s1 = stage(state.ion.density, state.ion.momentum,
                         state.electron.density, state.electron.momentum,
                         state.time, true);
  StageFields s2 = stage(s1.rho, s1.mi, s1.ne, s1.me, state.time + dt, false);
  for (int j = 0; j < mesh.ncells; ++j) {
    state.ion.density[j] = 0.5 * (state.ion.density[j] + s2.rho[j]);
    state.ion.momentum[j] = 0.5 * (state.ion.momentum[j] + s2.mi[j]);
    state.electron.density[j] = 0.5 * (state.electron.density[j] + s2.ne[j]);
    state.electron.momentum[j] = 0.5 * (state.electron.momentum[j] + s2.me[j]);
  }
  Field charge(mesh.ncells);
  for (int j = 0; j < mesh.ncells; ++j)
    charge[j] = state.ion.density[j] - state.electron.density[j];
  state.phi = solve_poisson(mesh, charge, state.delta).phi;
  state.time += dt;
  return rep;
}

void VacuumGuard::update(int floored_cells, int ncells) {
  const double frac = double(floored_cells) / double(std::max(ncells, 1));
  if (frac > 0.01)
    ++consecutive;
  else
    consecutive = 0;
  if (consecutive > 10)
    throw VacuumError(
        "density floor active on more than 1% of cells for more than 10 "
        "consecutive steps");
}

namespace {

// Number of equal substeps that lands exactly on the remaining interval
// without exceeding the stable step.
int substep_count(double remaining, double dt_stable) {
  if (remaining <= dt_stable) return 1;
  return int(std::ceil(remaining / dt_stable - 1e-12));
}

bool arrived(double time, double target) {
  return time >= target - 1e-13 * std::max(1.0, std::abs(target));
}

}  // namespace

void integrate_euler_to(const Mesh1D& mesh, EulerState& state, double t_target,
                        const SchemeConfig& cfg, const EosSpec& eos1,
                        const EosSpec& eos2, const EulerSourceFn* src,
                        EulerState* prev1, EulerState* prev2) {
  if (t_target < state.time)
    throw PreconditionError("integrate: target time is in the past");
  VacuumGuard guard;
  while (!arrived(state.time, t_target)) {
    const double dt_stable = compute_dt_euler(mesh, state, cfg, eos1, eos2);
    const double remaining = t_target - state.time;
    const double dt = remaining / substep_count(remaining, dt_stable);
    if (prev1) {
      if (prev2) *prev2 = *prev1;
      *prev1 = state;
    }
    StepReport rep = step_euler(mesh, state, dt, cfg, eos1, eos2, src);
    guard.update(rep.floored_cells, mesh.ncells);
  }
  state.time = t_target;
}

void integrate_ae_to(const Mesh1D& mesh, AeState& state, double t_target,
                     double delta, const SchemeConfig& cfg, const EosSpec& eos1,
                     const EosSpec& eos2, const EulerSourceFn* src,
                     AeState* prev1, AeState* prev2) {
  if (t_target < state.time)
    throw PreconditionError("integrate: target time is in the past");
  VacuumGuard guard;
  while (!arrived(state.time, t_target)) {
    const double dt_stable = compute_dt_ae(mesh, state, cfg, eos1, eos2);
    const double remaining = t_target - state.time;
    const double dt = remaining / substep_count(remaining, dt_stable);
    if (prev1) {
      if (prev2) *prev2 = *prev1;
      *prev1 = state;
    }
    StepReport rep = step_ae(mesh, state, dt, delta, cfg, eos1, eos2, src);
    guard.update(rep.floored_cells, mesh.ncells);
  }
  state.time = t_target;
}

void integrate_bep_to(const Mesh1D& mesh, PlasmaState& state, double t_target,
                      const SchemeConfig& cfg, const EosSpec& eos1,
                      const EosSpec& eos2, const BepSourceFn* src) {
  if (t_target < state.time)
    throw PreconditionError("integrate: target time is in the past");
  VacuumGuard guard;
  while (!arrived(state.time, t_target)) {
    bool osc = false;
    const double dt_stable = compute_dt(mesh, state, cfg, eos1, eos2, &osc);
    const double remaining = t_target - state.time;
    const double dt = remaining / substep_count(remaining, dt_stable);
    StepReport rep = step_bep(mesh, state, dt, cfg, eos1, eos2, src);
    guard.update(rep.floored_cells, mesh.ncells);
  }
  state.time = t_target;
}

}  // namespace eplab
