#include <cmath>
#include <cstring>
#include <vector>

#include "doctest.h"
#include "eplab/experiments.hpp"

using namespace eplab;

TEST_CASE("dimensionless groups for a hydrogen-like discharge") {
  ScalingInputs in;
  in.ion_mass = 1.67262192369e-27;
  in.electron_mass = 9.1093837015e-31;
  in.temperature = 1e4;
  in.density = 1e16;
  in.length = 1e-2;
  in.time = 1e-6;
  const ScalingGroups g = nondimensionalize(in);

  // Independent evaluation of the defining formulas.
  const double v0 = in.length / in.time;
  const double kT = in.k_boltzmann * in.temperature;
  CHECK(g.zeta == doctest::Approx(in.ion_mass * v0 * v0 / kT).epsilon(1e-13));
  CHECK(g.eps ==
        doctest::Approx(in.electron_mass * v0 * v0 / kT).epsilon(1e-13));
  const double debye2 = in.vacuum_permittivity * kT /
                        (in.elementary_charge * in.elementary_charge *
                         in.density * in.length * in.length);
  CHECK(g.delta == doctest::Approx(debye2).epsilon(1e-13));

  // The mass ratio survives the scaling untouched.
  CHECK(g.zeta / g.eps ==
        doctest::Approx(in.ion_mass / in.electron_mass).epsilon(1e-12));
  // Orders of magnitude for this regime.
  CHECK(g.eps < 1e-2);
  CHECK(g.delta < 1e-3);

  // Denser plasma means a smaller Debye group, inversely in density.
  ScalingInputs dense = in;
  dense.density = 1e18;
  const ScalingGroups gd = nondimensionalize(dense);
  CHECK(gd.delta == doctest::Approx(g.delta / 100.0).epsilon(1e-12));

  ScalingInputs bad = in;
  bad.temperature = 0.0;
  CHECK_THROWS_AS(nondimensionalize(bad), DomainError);
  bad = in;
  bad.length = -1.0;
  CHECK_THROWS_AS(nondimensionalize(bad), DomainError);
}

TEST_CASE("rate fit recovers exact power laws") {
  std::vector<double> xs{1e-1, 3e-2, 1e-2, 3e-3};
  std::vector<double> ys(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) ys[i] = 0.7 * xs[i] * xs[i];
  const RateFit fit = fit_rate(xs, ys);
  CHECK(fit.valid);
  CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(std::log(0.7)).epsilon(1e-10));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(fit_rate(xs, std::vector<double>{1.0}), PreconditionError);
  CHECK_FALSE(fit_rate({1.0}, {2.0}).valid);
  CHECK_FALSE(fit_rate({1.0, 2.0}, {0.0, 1.0}).valid);  // nonpositive y
  CHECK_FALSE(fit_rate({1.0, 1.0}, {2.0, 3.0}).valid);  // degenerate x

  // Flat data: zero slope, and r^2 reads 1 by the zero-variance rule.
  const RateFit flat = fit_rate({1.0, 2.0, 4.0}, {3.0, 3.0, 3.0});
  CHECK(flat.valid);
  CHECK(flat.slope == doctest::Approx(0.0));
  CHECK(flat.r_squared == doctest::Approx(1.0));
}

TEST_CASE("prepared data starts at the squared-parameter level") {
  const EosSpec eos1{}, eos2{};
  const Mesh1D mesh = Mesh1D::uniform(1.0, 200);
  const double eps = 1e-2, delta = 1e-2;
  const WellPrepared wp =
      well_prepared_init(mesh, eps, delta, eos1, eos2, 0.05);
  CHECK(wp.phi0 <= (eps + delta) * (eps + delta));
  CHECK(wp.phi0 >= 0.0);

  // The prepared electron flux satisfies the limit continuity equation
  // to second order: the defect must quarter on grid doubling.
  const Mesh1D fine = Mesh1D::uniform(1.0, 400);
  const WellPrepared wpf =
      well_prepared_init(fine, eps, delta, eos1, eos2, 0.05);
  const double ratio =
      wp.ref0.continuity_defect / wpf.ref0.continuity_defect;
  CHECK(ratio > 2.5);

  CHECK_THROWS_AS(well_prepared_init(mesh, eps, delta, eos1, eos2, 0.7),
                  DomainError);
  CHECK_THROWS_AS(well_prepared_init(mesh, -1.0, delta, eos1, eos2, 0.05),
                  DomainError);
}

TEST_CASE("prepared data collapses exactly at delta zero") {
  const EosSpec eos1{}, eos2{};
  const Mesh1D mesh = Mesh1D::uniform(1.0, 100);
  const WellPrepared wp = well_prepared_init(mesh, 1e-2, 0.0, eos1, eos2, 0.05);
  for (int j = 0; j < mesh.ncells; ++j) {
    CHECK(wp.bep.electron.density[j] == wp.bep.ion.density[j]);
    CHECK(wp.bep.electron.momentum[j] == wp.bep.ion.momentum[j]);
    CHECK(wp.ae.n[j] == wp.ae.rho[j]);
    CHECK(wp.euler.rho[j] == wp.bep.ion.density[j]);
  }
}

TEST_CASE("limit comparison produces a coherent sample series") {
  SweepConfig cfg;
  cfg.ncells = 50;
  cfg.t_end = 0.02;
  cfg.nsamples = 4;
  const SweepEntry entry = run_limit_comparison(SystemKind::ae, 1e-2, 1.0, cfg);
  REQUIRE(entry.series.samples.size() == 5);
  CHECK(entry.series.samples.front().t == 0.0);
  CHECK(entry.series.samples.front().sig3 == 0.0);
  for (size_t k = 1; k < entry.series.samples.size(); ++k)
    CHECK(entry.series.samples[k].t > entry.series.samples[k - 1].t);
  CHECK(entry.series.samples.back().t == doctest::Approx(0.02).epsilon(1e-14));
  CHECK(entry.phi_sup >= entry.phi0);
  CHECK(entry.phi_sup >= entry.series.samples.back().h.total);
  CHECK(entry.gronwall_ok);
  CHECK(entry.c_run >= 0.0);

  const SweepEntry eu = run_limit_comparison(SystemKind::euler, 1e-2, 1e-2, cfg);
  CHECK(eu.series.samples.size() == 5);
  CHECK(eu.gronwall_ok);

  CHECK_THROWS_AS(run_limit_comparison(SystemKind::bep, 1e-2, 1.0, cfg),
                  PreconditionError);
}

TEST_CASE("sweeps validate their parameter lists") {
  SweepConfig cfg;
  cfg.ncells = 40;
  cfg.t_end = 0.01;
  cfg.nsamples = 2;
  CHECK_THROWS_AS(run_zem_sweep({}, cfg), PreconditionError);
  CHECK_THROWS_AS(run_zem_sweep({1e-2, 1e-2}, cfg), PreconditionError);
  CHECK_THROWS_AS(run_zem_sweep({1e-3, 1e-2}, cfg), PreconditionError);
}

TEST_CASE("parallel sweep matches itself run to run") {
  SweepConfig cfg;
  cfg.ncells = 40;
  cfg.t_end = 0.01;
  cfg.nsamples = 3;
  cfg.nworkers = 2;
  const std::vector<double> eps{1e-1, 3e-2, 1e-2};
  const SweepResult a = run_zem_sweep(eps, cfg);
  const SweepResult b = run_zem_sweep(eps, cfg);
  REQUIRE(a.entries.size() == 3);
  REQUIRE(b.entries.size() == 3);
  for (size_t i = 0; i < a.entries.size(); ++i) {
    // Bitwise reproducibility regardless of worker scheduling.
    CHECK(std::memcmp(&a.entries[i].phi_sup, &b.entries[i].phi_sup,
                      sizeof(double)) == 0);
    CHECK(std::memcmp(&a.entries[i].phi0, &b.entries[i].phi0,
                      sizeof(double)) == 0);
    CHECK(a.entries[i].eps == eps[i]);
    CHECK(a.entries[i].delta == 1.0);
  }
  CHECK(std::memcmp(&a.fit.slope, &b.fit.slope, sizeof(double)) == 0);

  // Joint sweep ties the two parameters together and fits against their sum.
  const SweepResult j = run_joint_sweep({1e-1, 3e-2}, cfg);
  REQUIRE(j.entries.size() == 2);
  CHECK(j.entries[0].delta == j.entries[0].eps);
  CHECK(j.entries[1].delta == j.entries[1].eps);
}
