#include "eplab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>
#include <utility>

#include "eplab/poisson.hpp"

namespace eplab {

ScalingGroups nondimensionalize(const ScalingInputs& in) {
  const struct {
    const char* name;
    double value;
  } required[] = {
      {"ion_mass", in.ion_mass},
      {"electron_mass", in.electron_mass},
      {"temperature", in.temperature},
      {"density", in.density},
      {"length", in.length},
      {"time", in.time},
      {"k_boltzmann", in.k_boltzmann},
      {"elementary_charge", in.elementary_charge},
      {"vacuum_permittivity", in.vacuum_permittivity},
  };
  for (const auto& r : required)
    if (!(r.value > 0.0) || !std::isfinite(r.value))
      throw DomainError(std::string("nondimensionalize: ") + r.name +
                        " must be positive and finite");

  const double v0 = in.length / in.time;
  const double thermal = in.k_boltzmann * in.temperature;
  ScalingGroups g;
  g.zeta = in.ion_mass * v0 * v0 / thermal;
  g.eps = in.electron_mass * v0 * v0 / thermal;
  g.delta = in.vacuum_permittivity * thermal /
            (in.elementary_charge * in.elementary_charge * in.length *
             in.length * in.density);
  return g;
}

RateFit fit_rate(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size())
    throw PreconditionError("fit_rate: xs and ys must have the same length");
  RateFit fit;
  const size_t n = xs.size();
  if (n < 2) return fit;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::vector<double> lx(n), ly(n);
  for (size_t i = 0; i < n; ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) return fit;
    lx[i] = std::log(xs[i]);
    ly[i] = std::log(ys[i]);
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  const double dn = static_cast<double>(n);
  const double denom = dn * sxx - sx * sx;
  if (!(std::abs(denom) > 0.0)) return fit;
  fit.slope = (dn * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / dn;
  double ss_res = 0, ss_tot = 0;
  const double mean = sy / dn;
  for (size_t i = 0; i < n; ++i) {
    const double pred = fit.intercept + fit.slope * lx[i];
    ss_res += (ly[i] - pred) * (ly[i] - pred);
    ss_tot += (ly[i] - mean) * (ly[i] - mean);
  }
  fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  fit.valid = std::isfinite(fit.slope) && std::isfinite(fit.intercept) &&
              std::isfinite(fit.r_squared);
  return fit;
}

WellPrepared well_prepared_init(const Mesh1D& mesh, double eps, double delta,
                                const EosSpec& eos1, const EosSpec& eos2,
                                double amplitude, double density_floor) {
  if (!(eps > 0.0)) throw DomainError("well_prepared_init: eps must be > 0");
  if (!(delta >= 0.0))
    throw DomainError("well_prepared_init: delta must be >= 0");
  if (!(amplitude >= 0.0 && amplitude < 0.5))
    throw DomainError("well_prepared_init: amplitude must sit in [0, 0.5)");
  validate(eos1);
  validate(eos2);

  const int n = mesh.ncells;
  const double pi = std::numbers::pi;
  Field rho0(n), u0(n), m0(n);
  for (int j = 0; j < n; ++j) {
    const double x = mesh.center(j);
    rho0[j] = 1.0 + amplitude * std::cos(pi * x / mesh.length);
    u0[j] = amplitude * std::sin(pi * x / mesh.length);
    m0[j] = rho0[j] * u0[j];
  }

  // Electron density slaved to the ions through the quasi-neutral
  // elliptic balance (delta = 0 collapses it to n0 = rho0).
  Field n0 = solve_ae_elliptic(mesh, rho0, delta, eos2).n;

  // Initial rate of change of the slaved potential: differentiating the
  // elliptic balance in time and using the ion continuity law gives
  // (-delta Lap + 1/H2''(n0)) psi = -div(m0).
  Field shift(n), rhs(n);
  for (int j = 0; j < n; ++j)
    shift[j] = 1.0 / h_double_prime(eos2, std::max(n0[j], density_floor));
  const Field div_m0 = divergence(mesh, m0);
  for (int j = 0; j < n; ++j) rhs[j] = -div_m0[j];
  const Field psi = solve_shifted_neumann(mesh, delta, shift, rhs);

  const Field gpsi = gradient(mesh, psi);
  Field mu0(n), v0(n);
  for (int j = 0; j < n; ++j) {
    mu0[j] = m0[j] - delta * gpsi[j];
    v0[j] = mu0[j] / std::max(n0[j], density_floor);
  }

  Field phi0(n);
  if (delta > 0.0) {
    Field charge(n);
    for (int j = 0; j < n; ++j) charge[j] = rho0[j] - n0[j];
    phi0 = solve_poisson(mesh, charge, delta).phi;
  } else {
    for (int j = 0; j < n; ++j)
      phi0[j] = h_prime(eos2, std::max(n0[j], density_floor));
  }

  WellPrepared wp;
  wp.euler = EulerState{rho0, m0, 0.0};
  wp.ae = AeState{rho0, m0, n0, 0.0};
  wp.bep.ion = SpeciesState{rho0, m0};
  wp.bep.electron = SpeciesState{n0, mu0};
  wp.bep.phi = phi0;
  wp.bep.eps = eps;
  wp.bep.delta = delta;
  wp.bep.time = 0.0;

  LiftedReference& ref = wp.ref0;
  ref.rhobar = rho0;
  ref.ubar = u0;
  ref.nbar = n0;
  ref.vbar = v0;
  ref.phibar.resize(n);
  for (int j = 0; j < n; ++j)
    ref.phibar[j] = h_prime(eos2, std::max(n0[j], density_floor));
  ref.dphibar_dt = psi;
  ref.time = 0.0;
  ref.dt_bar = 0.0;

  // Defect of the lifted electron continuity law at t = 0; the psi
  // solve makes it second-order small.
  const Field div_mu0 = divergence(mesh, mu0);
  Field defect(n);
  for (int j = 0; j < n; ++j) {
    const double dtn = psi[j] / h_double_prime(eos2, std::max(n0[j], density_floor));
    defect[j] = std::abs(dtn + div_mu0[j]);
  }
  ref.continuity_defect = integrate(mesh, defect);

  wp.phi0 =
      relative_energy(mesh, wp.bep, ref, eos1, eos2, density_floor).total;
  return wp;
}

namespace {

void validate_sweep_config(const SweepConfig& cfg) {
  if (cfg.ncells < 2)
    throw DomainError("sweep: ncells must be at least 2");
  if (!(cfg.length > 0.0)) throw DomainError("sweep: length must be > 0");
  if (!(cfg.t_end > 0.0)) throw DomainError("sweep: t_end must be > 0");
  if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0))
    throw DomainError("sweep: cfl must sit in (0, 1]");
  if (cfg.nsamples < 1)
    throw DomainError("sweep: nsamples must be at least 1");
  validate(cfg.eos1);
  validate(cfg.eos2);
}

}  // namespace

SweepEntry run_limit_comparison(SystemKind reference, double eps, double delta,
                                const SweepConfig& cfg) {
  if (reference == SystemKind::bep)
    throw PreconditionError(
        "run_limit_comparison: reference must be a limit system");
  if (!(eps > 0.0))
    throw DomainError("run_limit_comparison: eps must be > 0");
  if (!(delta >= 0.0))
    throw DomainError("run_limit_comparison: delta must be >= 0");
  validate_sweep_config(cfg);

  const auto wall_start = std::chrono::steady_clock::now();
  const Mesh1D mesh = Mesh1D::uniform(cfg.length, cfg.ncells);
  SchemeConfig scheme;
  scheme.cfl = cfg.cfl;
  scheme.density_floor = cfg.density_floor;
  scheme.end_time = cfg.t_end;

  WellPrepared wp = well_prepared_init(mesh, eps, delta, cfg.eos1, cfg.eos2,
                                       cfg.amplitude, cfg.density_floor);

  SweepEntry entry;
  entry.eps = eps;
  entry.delta = delta;
  entry.ncells = cfg.ncells;

  // Reference lift at t = 0, matched to the limit system in play. It
  // doubles as the left endpoint of the first acceleration difference.
  LiftedReference ref_prev =
      reference == SystemKind::ae
          ? wp.ref0
          : lift_euler_solution(mesh, wp.euler, cfg.eos2, cfg.density_floor);

  RelEnergySample s0;
  s0.t = 0.0;
  s0.h = relative_energy(mesh, wp.bep, ref_prev, cfg.eos1, cfg.eos2,
                         cfg.density_floor);
  const SigmaTerms st0 = sigma_terms(mesh, wp.bep, ref_prev, cfg.eos1,
                                     cfg.eos2, cfg.density_floor);
  s0.sig1 = st0.sigma1;
  s0.sig2 = st0.sigma2;
  s0.sig3 = 0.0;  // no acceleration difference is available yet
  s0.sigstar = st0.sigma_star;
  entry.series.samples.push_back(s0);
  entry.phi0 = s0.h.total;

  PlasmaState bep = wp.bep;
  AeState ae = wp.ae, ae_prev1 = wp.ae;
  EulerState eu = wp.euler;

  for (int k = 1; k <= cfg.nsamples; ++k) {
    const double tk = cfg.t_end * static_cast<double>(k) /
                      static_cast<double>(cfg.nsamples);
    integrate_bep_to(mesh, bep, tk, scheme, cfg.eos1, cfg.eos2);

    LiftedReference ref_now;
    if (reference == SystemKind::ae) {
      integrate_ae_to(mesh, ae, tk, delta, scheme, cfg.eos1, cfg.eos2, nullptr,
                      &ae_prev1);
      ref_now = lift_ae_solution(mesh, ae_prev1, ae, delta, cfg.eos2,
                                 cfg.density_floor);
    } else {
      integrate_euler_to(mesh, eu, tk, scheme, cfg.eos1, cfg.eos2);
      ref_now = lift_euler_solution(mesh, eu, cfg.eos2, cfg.density_floor);
    }
    // Acceleration residual of the reference between sampling instants.
    const ApproxResidual ar = approx_residual(mesh, ref_prev, ref_now,
                                              reference == SystemKind::euler);

    RelEnergySample s;
    s.t = tk;
    s.h = relative_energy(mesh, bep, ref_now, cfg.eos1, cfg.eos2,
                          cfg.density_floor);
    const SigmaTerms st = sigma_terms(mesh, bep, ref_now, cfg.eos1, cfg.eos2,
                                      cfg.density_floor);
    s.sig1 = st.sigma1;
    s.sig2 = st.sigma2;
    s.sig3 = sigma3_term(mesh, bep, ref_now, ar.ebar, cfg.density_floor);
    s.sigstar = st.sigma_star;
    entry.series.samples.push_back(s);
    ref_prev = std::move(ref_now);
  }

  entry.phi_sup = 0.0;
  entry.c_run = 0.0;
  for (const RelEnergySample& s : entry.series.samples) {
    entry.phi_sup = std::max(entry.phi_sup, s.h.total);
    const double rhs = s.sig1 + s.sig2 + s.sig3 + s.sigstar;
    const double scale = s.h.total + eps + delta;
    if (scale > 0.0)
      entry.c_run = std::max(entry.c_run, std::max(0.0, rhs) / scale);
  }
  entry.gronwall_ok =
      entry.phi_sup <=
      1.05 * std::exp(entry.c_run * cfg.t_end) * (entry.phi0 + eps + delta);
  entry.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                    wall_start)
          .count();
  return entry;
}

namespace {

SweepResult run_sweep_impl(SystemKind reference,
                           const std::vector<std::pair<double, double>>& runs,
                           const std::vector<double>& xs,
                           const SweepConfig& cfg) {
  validate_sweep_config(cfg);
  if (runs.empty()) throw PreconditionError("sweep: empty parameter list");
  for (size_t i = 0; i + 1 < runs.size(); ++i)
    if (!(runs[i + 1].first < runs[i].first))
      throw PreconditionError("sweep: eps values must be strictly decreasing");

  const size_t n = runs.size();
  SweepResult result;
  result.entries.resize(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<size_t> next{0};

  auto worker = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        result.entries[i] = run_limit_comparison(reference, runs[i].first,
                                                 runs[i].second, cfg);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  int nworkers = cfg.nworkers > 0
                     ? cfg.nworkers
                     : static_cast<int>(std::thread::hardware_concurrency());
  nworkers = std::clamp(nworkers, 1, static_cast<int>(n));
  std::vector<std::thread> pool;
  for (int w = 1; w < nworkers; ++w) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);

  std::vector<double> ys(n);
  for (size_t i = 0; i < n; ++i) ys[i] = result.entries[i].phi_sup;
  result.fit = fit_rate(xs, ys);

  result.monotone = true;
  for (size_t i = 0; i + 1 < n; ++i)
    if (ys[i + 1] > 1.1 * ys[i]) result.monotone = false;
  return result;
}

}  // namespace

SweepResult run_zem_sweep(const std::vector<double>& eps_list,
                          const SweepConfig& cfg) {
  std::vector<std::pair<double, double>> runs;
  std::vector<double> xs;
  runs.reserve(eps_list.size());
  for (double e : eps_list) {
    runs.emplace_back(e, 1.0);
    xs.push_back(e);
  }
  return run_sweep_impl(SystemKind::ae, runs, xs, cfg);
}

SweepResult run_joint_sweep(const std::vector<double>& eps_list,
                            const SweepConfig& cfg) {
  std::vector<std::pair<double, double>> runs;
  std::vector<double> xs;
  runs.reserve(eps_list.size());
  for (double e : eps_list) {
    runs.emplace_back(e, e);
    xs.push_back(2.0 * e);  // rate against eps + delta
  }
  return run_sweep_impl(SystemKind::euler, runs, xs, cfg);
}

}  // namespace eplab
