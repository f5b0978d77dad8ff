#pragma once

#include <span>

#include "eplab/eos.hpp"
#include "eplab/mesh.hpp"

namespace eplab {

struct EllipticReport {
  int iterations = 0;
  double final_residual = 0.0;
  double compatibility_defect = 0.0;
};

struct PoissonSolution {
  Field phi;
  EllipticReport report;
};

struct AeEllipticSolution {
  Field n;
  EllipticReport report;
};

// 3-point Laplacian with mirror (even) ghost cells, the discrete form of
// a homogeneous Neumann boundary condition on a cell-centered grid.
Field neumann_laplacian(const Mesh1D& mesh, std::span<const double> f);

// Thomas elimination for a tridiagonal system. lower[0] and
// upper[n-1] are ignored. Assumes a diagonally dominant matrix, which
// every system assembled in this module is.
Field solve_tridiagonal(std::span<const double> lower,
                        std::span<const double> diag,
                        std::span<const double> upper,
                        std::span<const double> rhs);

// Solves (-delta * Lap + diag(shift)) x = rhs with the Neumann stencil.
// shift must be positive cellwise; the operator is then nonsingular and
// no gauge fixing is needed.
Field solve_shifted_neumann(const Mesh1D& mesh, double delta,
                            std::span<const double> shift,
                            std::span<const double> rhs);

// Solves -delta * phi'' = rhs with zero Neumann data and zero-mean
// normalization. Throws CompatibilityError when the discrete mean of
// rhs is too large for the problem to be solvable. The delta scaling is
// applied after a unit-delta solve, so solve_poisson(f, d) equals
// solve_poisson(f, 1) divided elementwise by d, bit for bit.
PoissonSolution solve_poisson(const Mesh1D& mesh, std::span<const double> rhs,
                              double delta);

// Solves -delta * (H'(n))'' + n = rho for n > 0 by damped Newton in the
// variable w = H'(n). delta = 0 short-circuits to n = rho exactly. A
// positive density field passed as guess seeds the iteration (typically
// the previous time level); otherwise the neutral profile n = rho does.
AeEllipticSolution solve_ae_elliptic(const Mesh1D& mesh,
                                     std::span<const double> rho, double delta,
                                     const EosSpec& eos2,
                                     std::span<const double> guess = {});

// Defect of the discrete identity
//   sum phibar * f * dx == delta * sum D(phibar) * D(phi) * dx
// with phi the Poisson solution for f and D the interface difference.
// Summation by parts makes this exact up to solver tolerance.
double verify_ibp1(const Mesh1D& mesh, std::span<const double> f,
                   std::span<const double> phibar, double delta);

// Defect of the quadratic identity
//   int f phi' ubar dx == int delta * ubar' * phi'^2 / 2 dx
// for wall-compatible ubar; second-order small in dx.
double verify_ibp2(const Mesh1D& mesh, std::span<const double> f,
                   std::span<const double> ubar, double delta);

}  // namespace eplab
