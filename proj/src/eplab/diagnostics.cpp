#include "eplab/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "eplab/poisson.hpp"

namespace eplab {

namespace {

double kinetic_cell(double dens, double mom, double floor) {
  return 0.5 * mom * mom / std::max(dens, floor);
}

double grad_energy(const Mesh1D& mesh, std::span<const double> f,
                   double weight) {
  const Field g = gradient(mesh, f);
  double s = 0.0;
  for (double x : g) s += x * x;
  return 0.5 * weight * s * mesh.dx;
}

}  // namespace

EnergyBreakdown total_energy_bep(const Mesh1D& mesh, const PlasmaState& state,
                                 const EosSpec& eos1, const EosSpec& eos2,
                                 double floor) {
  require_length(state.ion.density, mesh.ncells, "total_energy_bep");
  EnergyBreakdown e;
  for (int j = 0; j < mesh.ncells; ++j) {
    e.kin_ion += kinetic_cell(state.ion.density[j], state.ion.momentum[j], floor);
    e.int_ion += internal_energy(eos1, std::max(state.ion.density[j], 0.0));
    e.kin_ele += state.eps * kinetic_cell(state.electron.density[j],
                                          state.electron.momentum[j], floor);
    e.int_ele += internal_energy(eos2, std::max(state.electron.density[j], 0.0));
  }
  e.kin_ion *= mesh.dx;
  e.int_ion *= mesh.dx;
  e.kin_ele *= mesh.dx;
  e.int_ele *= mesh.dx;
  e.field = grad_energy(mesh, state.phi, state.delta);
  e.total = e.kin_ion + e.int_ion + e.kin_ele + e.int_ele + e.field;
  return e;
}

EnergyBreakdown total_energy_ae(const Mesh1D& mesh, const AeState& state,
                                double delta, const EosSpec& eos1,
                                const EosSpec& eos2, double floor) {
  require_length(state.rho, mesh.ncells, "total_energy_ae");
  EnergyBreakdown e;
  Field w(mesh.ncells);
  for (int j = 0; j < mesh.ncells; ++j) {
    e.kin_ion += kinetic_cell(state.rho[j], state.m[j], floor);
    e.int_ion += internal_energy(eos1, std::max(state.rho[j], 0.0));
    e.int_ele += internal_energy(eos2, std::max(state.n[j], 0.0));
    w[j] = h_prime(eos2, std::max(state.n[j], floor));
  }
  e.kin_ion *= mesh.dx;
  e.int_ion *= mesh.dx;
  e.int_ele *= mesh.dx;
  e.field = grad_energy(mesh, w, delta);
  e.total = e.kin_ion + e.int_ion + e.int_ele + e.field;
  return e;
}

EnergyBreakdown total_energy_euler(const Mesh1D& mesh, const EulerState& state,
                                   const EosSpec& eos1, const EosSpec& eos2,
                                   double floor) {
  require_length(state.rho, mesh.ncells, "total_energy_euler");
  EnergyBreakdown e;
  for (int j = 0; j < mesh.ncells; ++j) {
    e.kin_ion += kinetic_cell(state.rho[j], state.m[j], floor);
    e.int_ion += internal_energy(eos1, std::max(state.rho[j], 0.0));
    e.int_ele += internal_energy(eos2, std::max(state.rho[j], 0.0));
  }
  e.kin_ion *= mesh.dx;
  e.int_ion *= mesh.dx;
  e.int_ele *= mesh.dx;
  e.total = e.kin_ion + e.int_ion + e.int_ele;
  return e;
}

LiftedReference lift_ae_solution(const Mesh1D& mesh, const AeState& prev,
                                 const AeState& curr, double delta,
                                 const EosSpec& eos2, double floor) {
  require_length(curr.rho, mesh.ncells, "lift_ae_solution");
  const double dtbar = curr.time - prev.time;
  if (!(dtbar > 0.0))
    throw PreconditionError(
        "lift_ae_solution: states must be consecutive in time");

  const int n = mesh.ncells;
  LiftedReference ref;
  ref.time = curr.time;
  ref.dt_bar = dtbar;
  ref.rhobar = curr.rho;
  ref.nbar = curr.n;
  ref.phibar.resize(n);
  ref.dphibar_dt.resize(n);
  for (int j = 0; j < n; ++j) {
    ref.phibar[j] = h_prime(eos2, std::max(curr.n[j], floor));
    const double prev_phi = h_prime(eos2, std::max(prev.n[j], floor));
    ref.dphibar_dt[j] = (ref.phibar[j] - prev_phi) / dtbar;
  }

  ref.ubar.resize(n);
  ref.vbar.resize(n);
  const Field gdphi = gradient(mesh, ref.dphibar_dt);
  Field eflux(n);  // nbar vbar = m - delta grad(dt phibar)
  for (int j = 0; j < n; ++j) {
    ref.ubar[j] = curr.m[j] / std::max(curr.rho[j], floor);
    eflux[j] = curr.m[j] - delta * gdphi[j];
    ref.vbar[j] = eflux[j] / std::max(curr.n[j], floor);
  }

  const Field div_flux = divergence(mesh, eflux);
  Field defect(n);
  for (int j = 0; j < n; ++j)
    defect[j] = std::abs((curr.n[j] - prev.n[j]) / dtbar + div_flux[j]);
  ref.continuity_defect = integrate(mesh, defect);
  return ref;
}

LiftedReference lift_euler_solution(const Mesh1D& mesh,
                                    const EulerState& state,
                                    const EosSpec& eos2, double floor) {
  require_length(state.rho, mesh.ncells, "lift_euler_solution");
  const int n = mesh.ncells;
  LiftedReference ref;
  ref.time = state.time;
  ref.rhobar = state.rho;
  ref.nbar = state.rho;
  ref.ubar.resize(n);
  ref.phibar.resize(n);
  ref.dphibar_dt.assign(n, 0.0);
  for (int j = 0; j < n; ++j) {
    ref.ubar[j] = state.m[j] / std::max(state.rho[j], floor);
    ref.phibar[j] = h_prime(eos2, std::max(state.rho[j], floor));
  }
  ref.vbar = ref.ubar;
  return ref;
}

RelEnergyBreakdown relative_energy(const Mesh1D& mesh, const PlasmaState& state,
                                   const LiftedReference& ref,
                                   const EosSpec& eos1, const EosSpec& eos2,
                                   double floor) {
  require_length(state.ion.density, mesh.ncells, "relative_energy state");
  require_length(ref.rhobar, mesh.ncells, "relative_energy ref");
  const int n = mesh.ncells;
  RelEnergyBreakdown out;
  Field dphi(n);
  for (int j = 0; j < n; ++j) {
    const double rho = state.ion.density[j];
    const double ne = state.electron.density[j];
    const double u = state.ion.momentum[j] / std::max(rho, floor);
    const double v = state.electron.momentum[j] / std::max(ne, floor);
    const double du = u - ref.ubar[j];
    const double dv = v - ref.vbar[j];
    out.rk_ion += 0.5 * std::max(rho, 0.0) * du * du;
    out.rk_ele += 0.5 * state.eps * std::max(ne, 0.0) * dv * dv;
    out.ri_ion += relative_quantity(RelativeKind::internal_energy, eos1,
                                    std::max(rho, 0.0), ref.rhobar[j]);
    out.ri_ele += relative_quantity(RelativeKind::internal_energy, eos2,
                                    std::max(ne, 0.0), ref.nbar[j]);
    dphi[j] = state.phi[j] - ref.phibar[j];
  }
  out.rk_ion *= mesh.dx;
  out.rk_ele *= mesh.dx;
  out.ri_ion *= mesh.dx;
  out.ri_ele *= mesh.dx;
  out.field = grad_energy(mesh, dphi, state.delta);
  out.total = out.rk_ion + out.ri_ion + out.rk_ele + out.ri_ele + out.field;
  return out;
}

SigmaTerms sigma_terms(const Mesh1D& mesh, const PlasmaState& state,
                       const LiftedReference& ref, const EosSpec& eos1,
                       const EosSpec& eos2, double floor) {
  require_length(state.ion.density, mesh.ncells, "sigma_terms state");
  require_length(ref.rhobar, mesh.ncells, "sigma_terms ref");
  const int n = mesh.ncells;
  const Field dubar = divergence(mesh, ref.ubar);
  const Field dvbar = divergence(mesh, ref.vbar);
  Field dphi(n);
  for (int j = 0; j < n; ++j) dphi[j] = state.phi[j] - ref.phibar[j];
  const Field gdphi = gradient(mesh, dphi);

  SigmaTerms s;
  for (int j = 0; j < n; ++j) {
    const double rho = state.ion.density[j];
    const double ne = state.electron.density[j];
    const double u = state.ion.momentum[j] / std::max(rho, floor);
    const double v = state.electron.momentum[j] / std::max(ne, floor);
    const double du = u - ref.ubar[j];
    const double dv = v - ref.vbar[j];
    s.sigma1 += -std::max(rho, 0.0) * dubar[j] * du * du -
                state.eps * std::max(ne, 0.0) * dvbar[j] * dv * dv;
    s.sigma2 += -dubar[j] * relative_quantity(RelativeKind::pressure, eos1,
                                              std::max(rho, 0.0), ref.rhobar[j]) -
                dvbar[j] * relative_quantity(RelativeKind::pressure, eos2,
                                             std::max(ne, 0.0), ref.nbar[j]);
    s.sigma_star += ((rho - ref.rhobar[j]) * ref.ubar[j] -
                     (ne - ref.nbar[j]) * ref.vbar[j]) *
                    gdphi[j];
  }
  s.sigma1 *= mesh.dx;
  s.sigma2 *= mesh.dx;
  s.sigma_star *= mesh.dx;
  return s;
}

double sigma3_term(const Mesh1D& mesh, const PlasmaState& state,
                   const LiftedReference& ref, std::span<const double> ebar,
                   double floor) {
  require_length(ebar, mesh.ncells, "sigma3_term ebar");
  double s = 0.0;
  for (int j = 0; j < mesh.ncells; ++j) {
    const double ne = state.electron.density[j];
    const double v = state.electron.momentum[j] / std::max(ne, floor);
    const double ratio = std::max(ne, 0.0) / std::max(ref.nbar[j], floor);
    s += -state.eps * ratio * ebar[j] * (v - ref.vbar[j]);
  }
  return s * mesh.dx;
}

ApproxResidual approx_residual(const Mesh1D& mesh, const LiftedReference& prev,
                               const LiftedReference& curr, bool euler_lift) {
  require_length(curr.vbar, mesh.ncells, "approx_residual");
  const double dt = curr.time - prev.time;
  if (!(dt > 0.0))
    throw PreconditionError("approx_residual: lifts must be consecutive in time");
  const int n = mesh.ncells;
  ApproxResidual out;
  out.ebar.resize(n);
  const Field dvbar = divergence(mesh, curr.vbar);
  for (int j = 0; j < n; ++j) {
    const double dtv = (curr.vbar[j] - prev.vbar[j]) / dt;
    out.ebar[j] = curr.nbar[j] * (dtv + curr.vbar[j] * dvbar[j]);
    out.sup_ebar = std::max(out.sup_ebar, std::abs(out.ebar[j]));
    out.l1_ebar += std::abs(out.ebar[j]);
  }
  out.l1_ebar *= mesh.dx;
  if (euler_lift) {
    out.has_ebar0 = true;
    const Field lap = neumann_laplacian(mesh, curr.phibar);
    out.ebar0.resize(n);
    for (int j = 0; j < n; ++j) {
      out.ebar0[j] = -lap[j];
      out.sup_ebar0 = std::max(out.sup_ebar0, std::abs(out.ebar0[j]));
    }
  }
  return out;
}

std::vector<double> releng_identity_residual(const RelEnergySeries& series) {
  const size_t n = series.samples.size();
  if (n < 2)
    throw PreconditionError("releng_identity_residual: need at least 2 samples");
  std::vector<double> res;
  res.reserve(n - 1);
  for (size_t k = 0; k + 1 < n; ++k) {
    const auto& a = series.samples[k];
    const auto& b = series.samples[k + 1];
    const double dt = b.t - a.t;
    if (!(dt > 0.0))
      throw PreconditionError(
          "releng_identity_residual: sample times not increasing");
    const double rhs_a = a.sig1 + a.sig2 + a.sig3 + a.sigstar;
    const double rhs_b = b.sig1 + b.sig2 + b.sig3 + b.sigstar;
    res.push_back((b.h.total - a.h.total) / dt - 0.5 * (rhs_a + rhs_b));
  }
  return res;
}

DissipationCheck check_energy_dissipation(std::span<const double> energies,
                                          double dx, double dt_typical) {
  if (energies.size() < 2)
    throw PreconditionError("check_energy_dissipation: need at least 2 samples");
  DissipationCheck out;
  const double e0 = energies[0];
  out.tol = 1e-10 * std::abs(e0) + std::abs(e0) * dx * dt_typical;
  for (size_t k = 0; k + 1 < energies.size(); ++k)
    out.max_uphill = std::max(out.max_uphill, energies[k + 1] - energies[k]);
  out.max_uphill = std::max(out.max_uphill, 0.0);
  out.passed = out.max_uphill <= out.tol;
  return out;
}

LeadingOrderReport leading_order_check(const Mesh1D& mesh,
                                       const std::vector<AeState>& history,
                                       double delta, const EosSpec& eos1,
                                       const EosSpec& eos2, double floor) {
  if (history.size() < 2)
    throw PreconditionError("leading_order_check: need at least 2 samples");
  LeadingOrderReport rep;
  const int n = mesh.ncells;

  const double e0 =
      total_energy_ae(mesh, history.front(), delta, eos1, eos2, floor).total;
  for (const AeState& s : history) {
    Field w(n);
    for (int j = 0; j < n; ++j) w[j] = h_prime(eos2, std::max(s.n[j], floor));
    const Field lap = neumann_laplacian(mesh, w);
    for (int j = 0; j < n; ++j)
      rep.elliptic_residual = std::max(
          rep.elliptic_residual, std::abs(-delta * lap[j] + s.n[j] - s.rho[j]));
    const double e = total_energy_ae(mesh, s, delta, eos1, eos2, floor).total;
    rep.energy_drift = std::max(rep.energy_drift, std::abs(e - e0));
  }

  for (size_t k = 1; k < history.size(); ++k) {
    const AeState& a = history[k - 1];
    const AeState& b = history[k];
    const double dt = b.time - a.time;
    if (!(dt > 0.0))
      throw PreconditionError("leading_order_check: samples not increasing in time");
    Field mu = b.m;
    if (delta != 0.0) {
      Field dphidt(n);
      for (int j = 0; j < n; ++j)
        dphidt[j] = (h_prime(eos2, std::max(b.n[j], floor)) -
                     h_prime(eos2, std::max(a.n[j], floor))) /
                    dt;
      const Field g = gradient(mesh, dphidt);
      for (int j = 0; j < n; ++j) mu[j] -= delta * g[j];
    }
    for (int j = 0; j < n; ++j)
      rep.mu_minus_m = std::max(rep.mu_minus_m, std::abs(mu[j] - b.m[j]));
    const Field div_mu = divergence(mesh, mu);
    Field defect(n);
    for (int j = 0; j < n; ++j)
      defect[j] = std::abs((b.n[j] - a.n[j]) / dt + div_mu[j]);
    rep.continuity_defect =
        std::max(rep.continuity_defect, integrate(mesh, defect));
  }
  return rep;
}

}  // namespace eplab
