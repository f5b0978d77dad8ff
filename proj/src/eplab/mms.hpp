#pragma once

#include "eplab/hyperbolic.hpp"

namespace eplab {

// Closed-form trigonometric fields used to manufacture forced exact
// solutions. Density-like fields use cos(pi x / L) shapes (Neumann
// compatible), velocity-like fields sin(pi x / L) shapes (they vanish
// at the walls). phase != 0 deliberately breaks wall compatibility and
// is rejected by the source evaluators. time_dependent = false freezes
// the fields so every time-derivative term drops out.

struct ManufacturedEuler {
  double rho0 = 2.0;
  double arho = 0.1;
  double au = 0.1;
  double length = 1.0;
  double phase = 0.0;
  bool time_dependent = true;

  double rho(double x, double t) const;
  double rho_x(double x, double t) const;
  double rho_t(double x, double t) const;
  double u(double x, double t) const;
  double u_x(double x, double t) const;
  double u_t(double x, double t) const;
};

struct ManufacturedBep {
  double rho0 = 2.0;
  double arho = 0.1;
  double au = 0.1;
  double av = 0.1;
  double aphi = 0.05;
  double eps = 1.0;
  double delta = 1.0;
  double length = 1.0;
  double phase = 0.0;
  bool time_dependent = true;

  double rho(double x, double t) const;
  double rho_x(double x, double t) const;
  double rho_t(double x, double t) const;
  double u(double x, double t) const;
  double u_x(double x, double t) const;
  double u_t(double x, double t) const;
  // n = rho + delta * phi_xx, so the potential equation holds exactly.
  double n(double x, double t) const;
  double n_x(double x, double t) const;
  double n_t(double x, double t) const;
  double v(double x, double t) const;
  double v_x(double x, double t) const;
  double v_t(double x, double t) const;
  double phi(double x, double t) const;
  double phi_x(double x, double t) const;
};

struct ManufacturedAe {
  double n0 = 2.0;
  double an = 0.1;
  double au = 0.1;
  double delta = 1e-2;
  double length = 1.0;
  double phase = 0.0;
  EosSpec eos2{};
  bool time_dependent = true;

  double n(double x, double t) const;
  double n_x(double x, double t) const;
  double n_t(double x, double t) const;
  // rho = n - delta * (H2'(n))_xx, the elliptic relation read backwards.
  double rho(double x, double t) const;
  double rho_x(double x, double t) const;
  double rho_t(double x, double t) const;
  double u(double x, double t) const;
  double u_x(double x, double t) const;
  double u_t(double x, double t) const;
  double w_x(double x, double t) const;  // (H2'(n))_x
};

// Analytic residuals of the manufactured fields in the governing
// equations, evaluated per cell at time t. Adding these as forcing
// makes the manufactured fields an exact solution.
EulerSourceArrays mms_source(const ManufacturedEuler& man, const Mesh1D& mesh,
                             double t, const EosSpec& eos1,
                             const EosSpec& eos2);
BepSourceArrays mms_source(const ManufacturedBep& man, const Mesh1D& mesh,
                           double t, const EosSpec& eos1, const EosSpec& eos2);
EulerSourceArrays mms_source(const ManufacturedAe& man, const Mesh1D& mesh,
                             double t, const EosSpec& eos1);

}  // namespace eplab
