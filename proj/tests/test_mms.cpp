#include <cmath>
#include <functional>

#include "doctest.h"
#include "eplab/eos.hpp"
#include "eplab/mesh.hpp"
#include "eplab/mms.hpp"

using namespace eplab;

namespace {

// Central finite differences on closed-form fields give an independent
// reading of each source term. Step 1e-5 keeps truncation and roundoff
// both near 1e-7 on these O(1) trig fields.
constexpr double kh = 1e-5;

double dx_of(const std::function<double(double, double)>& f, double x,
             double t) {
  return (f(x + kh, t) - f(x - kh, t)) / (2.0 * kh);
}
double dt_of(const std::function<double(double, double)>& f, double x,
             double t) {
  return (f(x, t + kh) - f(x, t - kh)) / (2.0 * kh);
}

}  // namespace

TEST_CASE("single-species source matches a finite-difference residual") {
  const EosSpec eos1{1.4, 0.7};
  const EosSpec eos2{2.0, 1.3};
  ManufacturedEuler man;
  const Mesh1D mesh = Mesh1D::uniform(man.length, 37);
  const double t = 0.3;
  const EulerSourceArrays src = mms_source(man, mesh, t, eos1, eos2);

  auto mass_flux = [&](double x, double tt) {
    return man.rho(x, tt) * man.u(x, tt);
  };
  auto mom_flux = [&](double x, double tt) {
    const double r = man.rho(x, tt), u = man.u(x, tt);
    return r * u * u + pressure(eos1, r) + pressure(eos2, r);
  };
  auto density = [&](double x, double tt) { return man.rho(x, tt); };

  for (int j = 0; j < mesh.ncells; ++j) {
    const double x = mesh.center(j);
    const double s_rho = dt_of(density, x, t) + dx_of(mass_flux, x, t);
    const double s_m = dt_of(mass_flux, x, t) + dx_of(mom_flux, x, t);
    CHECK(std::abs(src.rho[j] - s_rho) <= 1e-6);
    CHECK(std::abs(src.m[j] - s_m) <= 1e-6);
  }
}

TEST_CASE("frozen fields drop every time derivative") {
  const EosSpec eos1{}, eos2{};
  ManufacturedEuler man;
  man.time_dependent = false;
  const Mesh1D mesh = Mesh1D::uniform(man.length, 16);
  CHECK(man.rho_t(0.3, 0.7) == 0.0);
  CHECK(man.u_t(0.3, 0.7) == 0.0);
  const EulerSourceArrays a = mms_source(man, mesh, 0.0, eos1, eos2);
  const EulerSourceArrays b = mms_source(man, mesh, 5.0, eos1, eos2);
  for (int j = 0; j < mesh.ncells; ++j) {
    CHECK(a.rho[j] == b.rho[j]);
    CHECK(a.m[j] == b.m[j]);
  }
}

TEST_CASE("two-species source matches finite differences, eps-weighted") {
  const EosSpec eos1{1.4, 0.7};
  const EosSpec eos2{2.0, 1.3};
  ManufacturedBep man;
  man.eps = 0.25;
  man.delta = 0.6;
  const Mesh1D mesh = Mesh1D::uniform(man.length, 29);
  const double t = 0.4;
  const BepSourceArrays src = mms_source(man, mesh, t, eos1, eos2);

  auto ion_mass_flux = [&](double x, double tt) {
    return man.rho(x, tt) * man.u(x, tt);
  };
  auto ion_mom_flux = [&](double x, double tt) {
    const double r = man.rho(x, tt), u = man.u(x, tt);
    return r * u * u + pressure(eos1, r);
  };
  auto ele_mass_flux = [&](double x, double tt) {
    return man.n(x, tt) * man.v(x, tt);
  };
  auto ele_mom_flux = [&](double x, double tt) {
    const double n = man.n(x, tt), v = man.v(x, tt);
    return n * v * v + pressure(eos2, n) / man.eps;
  };
  auto ion_density = [&](double x, double tt) { return man.rho(x, tt); };
  auto ele_density = [&](double x, double tt) { return man.n(x, tt); };

  for (int j = 0; j < mesh.ncells; ++j) {
    const double x = mesh.center(j);
    const double phix = man.phi_x(x, t);
    const double s_ri = dt_of(ion_density, x, t) + dx_of(ion_mass_flux, x, t);
    const double s_mi = dt_of(ion_mass_flux, x, t) +
                        dx_of(ion_mom_flux, x, t) + man.rho(x, t) * phix;
    const double s_re = dt_of(ele_density, x, t) + dx_of(ele_mass_flux, x, t);
    const double s_me = dt_of(ele_mass_flux, x, t) +
                        dx_of(ele_mom_flux, x, t) -
                        man.n(x, t) * phix / man.eps;
    CHECK(std::abs(src.rho_i[j] - s_ri) <= 1e-6);
    CHECK(std::abs(src.m_i[j] - s_mi) <= 1e-6);
    CHECK(std::abs(src.rho_e[j] - s_re) <= 1e-5);
    CHECK(std::abs(src.m_e[j] - s_me) <= 1e-5);
  }
}

TEST_CASE("two-species fields satisfy the potential equation exactly") {
  ManufacturedBep man;
  man.delta = 0.6;
  const double t = 0.4;
  for (double x : {0.13, 0.5, 0.82}) {
    auto phix = [&](double xx, double tt) { return man.phi_x(xx, tt); };
    const double phixx = dx_of(phix, x, t);
    CHECK(std::abs(man.rho(x, t) - man.n(x, t) + man.delta * phixx) <= 1e-6);
  }
}

TEST_CASE("slaved-electron source matches finite differences") {
  const EosSpec eos1{1.4, 0.7};
  ManufacturedAe man;
  man.eos2 = EosSpec{2.0, 1.3};
  man.delta = 0.05;
  const Mesh1D mesh = Mesh1D::uniform(man.length, 23);
  const double t = 0.2;
  const EulerSourceArrays src = mms_source(man, mesh, t, eos1);

  auto mass_flux = [&](double x, double tt) {
    return man.rho(x, tt) * man.u(x, tt);
  };
  auto mom_flux = [&](double x, double tt) {
    const double r = man.rho(x, tt), u = man.u(x, tt);
    return r * u * u + pressure(eos1, r);
  };
  auto density = [&](double x, double tt) { return man.rho(x, tt); };

  for (int j = 0; j < mesh.ncells; ++j) {
    const double x = mesh.center(j);
    const double s_rho = dt_of(density, x, t) + dx_of(mass_flux, x, t);
    const double s_m = dt_of(mass_flux, x, t) + dx_of(mom_flux, x, t) +
                       man.rho(x, t) * man.w_x(x, t);
    CHECK(std::abs(src.rho[j] - s_rho) <= 1e-6);
    CHECK(std::abs(src.m[j] - s_m) <= 1e-6);
  }
}

TEST_CASE("slaved-electron fields satisfy the elliptic relation") {
  ManufacturedAe man;
  man.delta = 0.05;
  const double t = 0.2;
  for (double x : {0.21, 0.5, 0.77}) {
    auto wx = [&](double xx, double tt) { return man.w_x(xx, tt); };
    const double wxx = dx_of(wx, x, t);
    CHECK(std::abs(man.rho(x, t) - (man.n(x, t) - man.delta * wxx)) <= 1e-6);
  }
}

TEST_CASE("wall-incompatible velocity shapes are rejected") {
  const EosSpec eos1{}, eos2{};
  const Mesh1D mesh = Mesh1D::uniform(1.0, 8);
  ManufacturedEuler eu;
  eu.phase = 0.3;
  CHECK_THROWS_AS(mms_source(eu, mesh, 0.0, eos1, eos2), PreconditionError);
  ManufacturedBep bp;
  bp.phase = 0.3;
  CHECK_THROWS_AS(mms_source(bp, mesh, 0.0, eos1, eos2), PreconditionError);
  ManufacturedAe ae;
  ae.phase = 0.3;
  CHECK_THROWS_AS(mms_source(ae, mesh, 0.0, eos1), PreconditionError);
}

TEST_CASE("nonpositive manufactured densities are rejected") {
  const EosSpec eos1{}, eos2{};
  const Mesh1D mesh = Mesh1D::uniform(1.0, 8);
  ManufacturedEuler eu;
  eu.arho = 3.0;  // rho0 = 2 dips below zero
  CHECK_THROWS_AS(mms_source(eu, mesh, 0.0, eos1, eos2), DomainError);
  ManufacturedBep bp;
  bp.eps = -1.0;
  CHECK_THROWS_AS(mms_source(bp, mesh, 0.0, eos1, eos2), DomainError);
}

TEST_CASE("forced single-species run tracks the manufactured fields") {
  const EosSpec eos1{}, eos2{};
  ManufacturedEuler man;
  const Mesh1D mesh = Mesh1D::uniform(man.length, 100);
  SchemeConfig scheme;
  EulerState s;
  s.rho.resize(mesh.ncells);
  s.m.resize(mesh.ncells);
  for (int j = 0; j < mesh.ncells; ++j) {
    const double x = mesh.center(j);
    s.rho[j] = man.rho(x, 0.0);
    s.m[j] = man.rho(x, 0.0) * man.u(x, 0.0);
  }
  const EulerSourceFn src = [&](double tt) {
    return mms_source(man, mesh, tt, eos1, eos2);
  };
  const double t_end = 0.02;
  integrate_euler_to(mesh, s, t_end, scheme, eos1, eos2, &src);
  double err = 0.0;
  for (int j = 0; j < mesh.ncells; ++j) {
    const double x = mesh.center(j);
    err += std::abs(s.rho[j] - man.rho(x, t_end)) * mesh.dx;
    err += std::abs(s.m[j] - man.rho(x, t_end) * man.u(x, t_end)) * mesh.dx;
  }
  CHECK(err <= 5e-3);
}
