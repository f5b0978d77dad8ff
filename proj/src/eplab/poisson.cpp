#include "eplab/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

namespace eplab {

namespace {

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double mean(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

// Defect of the Neumann compatibility condition: the discrete integral
// of the right hand side.
double compatibility_defect(const Mesh1D& mesh, std::span<const double> rhs) {
  double s = 0.0;
  for (double x : rhs) s += x;
  return std::abs(s * mesh.dx);
}

void check_compatibility(const Mesh1D& mesh, std::span<const double> rhs,
                         const char* what) {
  double l1 = 0.0;
  for (double x : rhs) l1 += std::abs(x);
  l1 *= mesh.dx;
  const double defect = compatibility_defect(mesh, rhs);
  if (defect > 1e-10 * (l1 + 1.0))
    throw CompatibilityError(std::string(what) +
                                 ": right hand side has nonzero mean, defect " +
                                 std::to_string(defect),
                             defect);
}

}  // namespace

Field neumann_laplacian(const Mesh1D& mesh, std::span<const double> f) {
  require_length(f, mesh.ncells, "neumann_laplacian");
  const int n = mesh.ncells;
  const double inv_dx2 = 1.0 / (mesh.dx * mesh.dx);
  Field out(n);
  for (int j = 0; j < n; ++j) {
    const double left = (j == 0) ? f[0] : f[j - 1];
    const double right = (j == n - 1) ? f[n - 1] : f[j + 1];
    out[j] = (left - 2.0 * f[j] + right) * inv_dx2;
  }
  return out;
}

Field solve_tridiagonal(std::span<const double> lower,
                        std::span<const double> diag,
                        std::span<const double> upper,
                        std::span<const double> rhs) {
  const size_t n = diag.size();
  if (lower.size() != n || upper.size() != n || rhs.size() != n)
    throw DomainError("solve_tridiagonal: band length mismatch");
  if (n == 0) return {};
  Field c(n), d(n);
  c[0] = upper[0] / diag[0];
  d[0] = rhs[0] / diag[0];
  for (size_t i = 1; i < n; ++i) {
    const double denom = diag[i] - lower[i] * c[i - 1];
    c[i] = upper[i] / denom;
    d[i] = (rhs[i] - lower[i] * d[i - 1]) / denom;
  }
  Field x(n);
  x[n - 1] = d[n - 1];
  for (size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
  return x;
}

Field solve_shifted_neumann(const Mesh1D& mesh, double delta,
                            std::span<const double> shift,
                            std::span<const double> rhs) {
  require_length(shift, mesh.ncells, "solve_shifted_neumann shift");
  require_length(rhs, mesh.ncells, "solve_shifted_neumann rhs");
  if (!(delta >= 0.0))
    throw DomainError("solve_shifted_neumann: delta must be nonnegative");
  const int n = mesh.ncells;
  const double w = delta / (mesh.dx * mesh.dx);
  Field lower(n), diag(n), upper(n);
  for (int j = 0; j < n; ++j) {
    if (!(shift[j] > 0.0))
      throw DomainError("solve_shifted_neumann: shift must be positive cellwise");
    const bool interior_left = j > 0;
    const bool interior_right = j < n - 1;
    lower[j] = interior_left ? -w : 0.0;
    upper[j] = interior_right ? -w : 0.0;
    diag[j] = shift[j] + w * ((interior_left ? 1.0 : 0.0) +
                              (interior_right ? 1.0 : 0.0));
  }
  return solve_tridiagonal(lower, diag, upper, rhs);
}

PoissonSolution solve_poisson(const Mesh1D& mesh, std::span<const double> rhs,
                              double delta) {
  require_length(rhs, mesh.ncells, "solve_poisson");
  if (!(delta > 0.0))
    throw DomainError("solve_poisson: delta must be positive");
  check_compatibility(mesh, rhs, "solve_poisson");

  const int n = mesh.ncells;
  const double inv_dx2 = 1.0 / (mesh.dx * mesh.dx);

  // Project out the (tiny) incompatible component, then solve the
  // unit-delta problem with the potential pinned in the first cell.
  // Compatibility makes the dropped first equation hold automatically.
  Field b(rhs.begin(), rhs.end());
  const double mu = mean(b);
  for (double& x : b) x -= mu;

  Field lower(n), diag(n), upper(n), r(n);
  lower[0] = 0.0;
  diag[0] = 1.0;
  upper[0] = 0.0;
  r[0] = 0.0;
  for (int j = 1; j < n; ++j) {
    lower[j] = -inv_dx2;
    upper[j] = (j < n - 1) ? -inv_dx2 : 0.0;
    diag[j] = (j < n - 1) ? 2.0 * inv_dx2 : inv_dx2;
    r[j] = b[j];
  }
  Field phi = solve_tridiagonal(lower, diag, upper, r);

  const double phimean = mean(phi);
  for (double& x : phi) x -= phimean;
  if (delta != 1.0)
    for (double& x : phi) x /= delta;

  PoissonSolution out;
  out.report.iterations = 1;
  out.report.compatibility_defect = compatibility_defect(mesh, rhs);

  Field lap = neumann_laplacian(mesh, phi);
  double res = 0.0;
  for (int j = 0; j < n; ++j)
    res = std::max(res, std::abs(-delta * lap[j] - b[j]));
  out.report.final_residual = res;
  out.phi = std::move(phi);

  const double tol = 1e-12 * std::max(max_abs(rhs), 1.0) * n;
  if (res > tol)
    throw NonconvergenceError(
        "solve_poisson: direct solve residual " + std::to_string(res) +
            " above contract " + std::to_string(tol),
        1, res);
  return out;
}

AeEllipticSolution solve_ae_elliptic(const Mesh1D& mesh,
                                     std::span<const double> rho, double delta,
                                     const EosSpec& eos2,
                                     std::span<const double> guess) {
  require_length(rho, mesh.ncells, "solve_ae_elliptic");
  validate(eos2);
  if (!(delta >= 0.0))
    throw DomainError("solve_ae_elliptic: delta must be nonnegative");
  for (double r : rho)
    if (!(r > 0.0))
      throw DomainError("solve_ae_elliptic: rho must be positive cellwise");

  AeEllipticSolution out;
  if (delta == 0.0) {
    out.n.assign(rho.begin(), rho.end());
    return out;
  }

  const int n = mesh.ncells;
  const int max_iters = 50;

  // Residual of -delta Lap w + G(w) - rho with G the inverse of H'.
  auto residual = [&](const Field& w, Field& res) -> double {
    Field lap = neumann_laplacian(mesh, w);
    double norm = 0.0;
    for (int j = 0; j < n; ++j) {
      res[j] = -delta * lap[j] + h_prime_inverse(eos2, w[j]) - rho[j];
      norm = std::max(norm, std::abs(res[j]));
    }
    return norm;
  };

  bool warm = guess.size() == static_cast<size_t>(n);
  if (warm)
    for (double g : guess)
      if (!(g > 0.0)) warm = false;
  Field w(n);
  for (int j = 0; j < n; ++j)
    w[j] = h_prime(eos2, warm ? guess[j] : rho[j]);

  const double rho_scale = std::max(1.0, max_abs(rho));
  // Evaluating the residual sums Laplacian terms of size ~4 delta/dx^2 |w|,
  // so it carries roundoff of that magnitude no matter how good the iterate
  // is. Both thresholds sit a safe factor above that floor; on coarse grids
  // or small delta the absolute tolerances dominate as before.
  const double noise =
      std::numeric_limits<double>::epsilon() *
      (4.0 * delta / (mesh.dx * mesh.dx) * std::max(1.0, max_abs(w)) +
       2.0 * rho_scale);
  const double target_tol = std::max(1e-12 * rho_scale, 4.0 * noise);
  const double accept_tol = std::max(1e-10 * rho_scale, 32.0 * noise);

  Field res(n), res_trial(n);
  double res_norm = residual(w, res);
  int iters = 0;
  while (res_norm > target_tol && iters < max_iters) {
    ++iters;
    // Newton step: (-delta Lap + diag(G'(w))) d = -res, with
    // G'(w) = 1 / H''(G(w)) > 0.
    Field shift(n), neg(n);
    for (int j = 0; j < n; ++j) {
      const double nj = h_prime_inverse(eos2, w[j]);
      shift[j] = 1.0 / h_double_prime(eos2, nj);
      neg[j] = -res[j];
    }
    Field d = solve_shifted_neumann(mesh, delta, shift, neg);

    double lambda = 1.0;
    Field w_trial(n);
    bool accepted = false;
    for (int halving = 0; halving <= 5; ++halving) {
      bool positive = true;
      for (int j = 0; j < n; ++j) {
        w_trial[j] = w[j] + lambda * d[j];
        if (!(w_trial[j] > 0.0)) positive = false;
      }
      if (positive) {
        const double trial_norm = residual(w_trial, res_trial);
        if (trial_norm < res_norm || halving == 5) {
          w.swap(w_trial);
          res.swap(res_trial);
          res_norm = trial_norm;
          accepted = true;
          break;
        }
      }
      lambda *= 0.5;
    }
    if (!accepted)
      throw NonconvergenceError(
          "solve_ae_elliptic: damped Newton step kept w out of domain", iters,
          res_norm);
  }

  if (res_norm > accept_tol) {
    char rbuf[40];
    std::snprintf(rbuf, sizeof rbuf, "%.17g", res_norm);
    throw NonconvergenceError("solve_ae_elliptic: residual " +
                                  std::string(rbuf) + " after " +
                                  std::to_string(iters) + " iterations",
                              iters, res_norm);
  }

  out.n.resize(n);
  for (int j = 0; j < n; ++j) out.n[j] = h_prime_inverse(eos2, w[j]);
  out.report.iterations = iters;
  out.report.final_residual = res_norm;
  return out;
}

double verify_ibp1(const Mesh1D& mesh, std::span<const double> f,
                   std::span<const double> phibar, double delta) {
  require_length(f, mesh.ncells, "verify_ibp1 f");
  require_length(phibar, mesh.ncells, "verify_ibp1 phibar");
  const Field phi = solve_poisson(mesh, f, delta).phi;

  double lhs = 0.0;
  for (int j = 0; j < mesh.ncells; ++j) lhs += phibar[j] * f[j];
  lhs *= mesh.dx;

  // Gradients live on interior interfaces; the wall fluxes vanish by the
  // Neumann closure, which is what makes the identity exact.
  double rhs = 0.0;
  const double inv_dx = 1.0 / mesh.dx;
  for (int i = 0; i + 1 < mesh.ncells; ++i) {
    const double dpb = (phibar[i + 1] - phibar[i]) * inv_dx;
    const double dp = (phi[i + 1] - phi[i]) * inv_dx;
    rhs += dpb * dp;
  }
  rhs *= delta * mesh.dx;
  return std::abs(lhs - rhs);
}

double verify_ibp2(const Mesh1D& mesh, std::span<const double> f,
                   std::span<const double> ubar, double delta) {
  require_length(f, mesh.ncells, "verify_ibp2 f");
  require_length(ubar, mesh.ncells, "verify_ibp2 ubar");

  // ubar must vanish at the walls; the boundary cells sit dx/2 away, so
  // allow one cell's worth of slope.
  double max_slope = 0.0;
  for (int i = 0; i + 1 < mesh.ncells; ++i)
    max_slope = std::max(max_slope, std::abs(ubar[i + 1] - ubar[i]) / mesh.dx);
  const double wall_tol = mesh.dx * max_slope + 1e-12 * (1.0 + max_abs(ubar));
  if (std::abs(ubar.front()) > wall_tol || std::abs(ubar.back()) > wall_tol)
    throw PreconditionError("verify_ibp2: ubar does not vanish at the walls");

  const Field phi = solve_poisson(mesh, f, delta).phi;
  const Field gphi = gradient(mesh, phi);
  const Field dubar = divergence(mesh, ubar);

  double lhs = 0.0, rhs = 0.0;
  for (int j = 0; j < mesh.ncells; ++j) {
    lhs += f[j] * gphi[j] * ubar[j];
    rhs += delta * dubar[j] * 0.5 * gphi[j] * gphi[j];
  }
  lhs *= mesh.dx;
  rhs *= mesh.dx;
  return std::abs(lhs - rhs);
}

}  // namespace eplab
