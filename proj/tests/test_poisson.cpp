#include <cmath>
#include <random>

#include "doctest.h"
#include "eplab/poisson.hpp"

using namespace eplab;

namespace {
constexpr double pi = 3.14159265358979323846;
}

TEST_CASE("tridiagonal solve inverts a random dominant system") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  const int n = 64;
  Field lower(n), diag(n), upper(n), x_true(n), rhs(n);
  for (int i = 0; i < n; ++i) {
    lower[i] = uni(rng);
    upper[i] = uni(rng);
    diag[i] = 4.0 + uni(rng);  // dominant
    x_true[i] = uni(rng);
  }
  for (int i = 0; i < n; ++i) {
    rhs[i] = diag[i] * x_true[i];
    if (i > 0) rhs[i] += lower[i] * x_true[i - 1];
    if (i < n - 1) rhs[i] += upper[i] * x_true[i + 1];
  }
  const Field x = solve_tridiagonal(lower, diag, upper, rhs);
  for (int i = 0; i < n; ++i)
    CHECK(x[i] == doctest::Approx(x_true[i]).epsilon(1e-12));
}

TEST_CASE("neumann laplacian annihilates constants") {
  const Mesh1D mesh = Mesh1D::uniform(1.0, 17);
  Field f(mesh.ncells, 3.7);
  for (double v : neumann_laplacian(mesh, f)) CHECK(v == 0.0);
}

TEST_CASE("poisson solve converges at second order on the first mode") {
  // -phi'' = (pi/L)^2 cos(pi x / L) has solution cos(pi x / L).
  std::vector<double> errors;
  for (int n : {50, 100, 200}) {
    const Mesh1D mesh = Mesh1D::uniform(1.0, n);
    Field rhs(n);
    for (int j = 0; j < n; ++j)
      rhs[j] = pi * pi * std::cos(pi * mesh.center(j));
    const PoissonSolution sol = solve_poisson(mesh, rhs, 1.0);
    double worst = 0.0;
    for (int j = 0; j < n; ++j)
      worst = std::max(worst,
                       std::abs(sol.phi[j] - std::cos(pi * mesh.center(j))));
    errors.push_back(worst);
  }
  CHECK(errors[0] / errors[1] == doctest::Approx(4.0).epsilon(0.2));
  CHECK(errors[1] / errors[2] == doctest::Approx(4.0).epsilon(0.2));
}

TEST_CASE("poisson residual and gauge") {
  const Mesh1D mesh = Mesh1D::uniform(1.0, 80);
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  Field rhs(mesh.ncells);
  for (double& v : rhs) v = uni(rng);
  double mean = 0.0;
  for (double v : rhs) mean += v;
  mean /= mesh.ncells;
  for (double& v : rhs) v -= mean;

  const PoissonSolution sol = solve_poisson(mesh, rhs, 1.0);
  double phi_mean = 0.0;
  for (double v : sol.phi) phi_mean += v;
  CHECK(std::abs(phi_mean / mesh.ncells) <= 1e-12);

  const Field lap = neumann_laplacian(mesh, sol.phi);
  for (int j = 0; j < mesh.ncells; ++j)
    CHECK(std::abs(-lap[j] - rhs[j]) <= 1e-9);
}

TEST_CASE("poisson rejects incompatible data") {
  const Mesh1D mesh = Mesh1D::uniform(1.0, 30);
  Field rhs(mesh.ncells, 1.0);  // mean 1, not solvable with walls
  CHECK_THROWS_AS(solve_poisson(mesh, rhs, 1.0), CompatibilityError);
}

TEST_CASE("poisson delta scaling is exact") {
  const Mesh1D mesh = Mesh1D::uniform(1.0, 64);
  Field rhs(mesh.ncells);
  for (int j = 0; j < mesh.ncells; ++j)
    rhs[j] = std::cos(pi * mesh.center(j)) + 0.2 * std::cos(3 * pi * mesh.center(j));
  const Field unit = solve_poisson(mesh, rhs, 1.0).phi;
  for (double delta : {1e-3, 0.37, 12.0}) {
    const Field scaled = solve_poisson(mesh, rhs, delta).phi;
    for (int j = 0; j < mesh.ncells; ++j)
      CHECK(scaled[j] == unit[j] / delta);  // bitwise
  }
  CHECK_THROWS_AS(solve_poisson(mesh, rhs, 0.0), DomainError);
}

TEST_CASE("shifted neumann solve recovers a manufactured field") {
  const Mesh1D mesh = Mesh1D::uniform(1.0, 90);
  Field x_true(mesh.ncells), shift(mesh.ncells);
  for (int j = 0; j < mesh.ncells; ++j) {
    x_true[j] = std::cos(2 * pi * mesh.center(j)) + 0.5;
    shift[j] = 1.0 + 0.3 * std::cos(pi * mesh.center(j));
  }
  const double delta = 0.7;
  const Field lap = neumann_laplacian(mesh, x_true);
  Field rhs(mesh.ncells);
  for (int j = 0; j < mesh.ncells; ++j)
    rhs[j] = -delta * lap[j] + shift[j] * x_true[j];
  const Field x = solve_shifted_neumann(mesh, delta, shift, rhs);
  for (int j = 0; j < mesh.ncells; ++j)
    CHECK(x[j] == doctest::Approx(x_true[j]).epsilon(1e-11));

  // delta = 0 reduces to a diagonal solve
  Field diag_rhs(mesh.ncells);
  for (int j = 0; j < mesh.ncells; ++j) diag_rhs[j] = shift[j] * x_true[j];
  const Field xd = solve_shifted_neumann(mesh, 0.0, shift, diag_rhs);
  for (int j = 0; j < mesh.ncells; ++j)
    CHECK(xd[j] == doctest::Approx(x_true[j]).epsilon(1e-13));

  Field bad_shift(mesh.ncells, 0.0);
  CHECK_THROWS_AS(solve_shifted_neumann(mesh, 1.0, bad_shift, rhs),
                  DomainError);
}

TEST_CASE("nonlinear elliptic solve matches a discretely manufactured state") {
  const EosSpec eos2{2.0, 1.0};
  // Amplitude kept small enough that the manufactured rho stays positive.
  for (double delta : {1e-1, 1e-2}) {
    const Mesh1D mesh = Mesh1D::uniform(1.0, 70);
    Field n_true(mesh.ncells), w(mesh.ncells);
    for (int j = 0; j < mesh.ncells; ++j) {
      n_true[j] = 1.0 + 0.2 * std::cos(pi * mesh.center(j));
      w[j] = h_prime(eos2, n_true[j]);
    }
    const Field lap = neumann_laplacian(mesh, w);
    Field rho(mesh.ncells);
    for (int j = 0; j < mesh.ncells; ++j)
      rho[j] = n_true[j] - delta * lap[j];
    const AeEllipticSolution sol = solve_ae_elliptic(mesh, rho, delta, eos2);
    for (int j = 0; j < mesh.ncells; ++j)
      CHECK(sol.n[j] == doctest::Approx(n_true[j]).epsilon(1e-9));
    CHECK(sol.report.final_residual <= 1e-10);
  }
}

TEST_CASE("nonlinear elliptic solve collapses exactly at delta zero") {
  const Mesh1D mesh = Mesh1D::uniform(1.0, 40);
  Field rho(mesh.ncells);
  for (int j = 0; j < mesh.ncells; ++j)
    rho[j] = 2.0 + std::sin(3.0 * mesh.center(j));
  const AeEllipticSolution sol =
      solve_ae_elliptic(mesh, rho, 0.0, EosSpec{2.0, 1.0});
  for (int j = 0; j < mesh.ncells; ++j) CHECK(sol.n[j] == rho[j]);
}

TEST_CASE("integration by parts, linear identity") {
  const Mesh1D mesh = Mesh1D::uniform(1.0, 128);
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (double delta : {1.0, 1e-2}) {
    for (int trial = 0; trial < 5; ++trial) {
      Field f(mesh.ncells), phibar(mesh.ncells);
      for (double& v : f) v = uni(rng);
      for (double& v : phibar) v = uni(rng);
      double mean = 0.0;
      for (double v : f) mean += v;
      mean /= mesh.ncells;
      for (double& v : f) v -= mean;
      CHECK(verify_ibp1(mesh, f, phibar, delta) <= 1e-10);
    }
  }
}

TEST_CASE("integration by parts, quadratic identity") {
  // Mixed harmonics: with a single mode both sides vanish analytically
  // and the defect is pure rounding noise.
  std::vector<double> defects;
  for (int n : {100, 200, 400}) {
    const Mesh1D mesh = Mesh1D::uniform(1.0, n);
    Field f(n), ubar(n);
    for (int j = 0; j < n; ++j) {
      const double x = mesh.center(j);
      f[j] = std::cos(pi * x) + 0.3 * std::cos(2.0 * pi * x);
      ubar[j] = std::sin(pi * x) * (0.5 + 0.2 * std::cos(pi * x));
    }
    defects.push_back(verify_ibp2(mesh, f, ubar, 1.0));
  }
  CHECK(defects[0] / defects[1] == doctest::Approx(4.0).epsilon(0.4));
  CHECK(defects[1] / defects[2] == doctest::Approx(4.0).epsilon(0.4));

  // wall-incompatible weight is rejected
  const Mesh1D mesh = Mesh1D::uniform(1.0, 100);
  Field f(100), bad(100);
  for (int j = 0; j < 100; ++j) {
    f[j] = std::cos(pi * mesh.center(j));
    bad[j] = std::cos(pi * mesh.center(j));  // nonzero at both walls
  }
  CHECK_THROWS_AS(verify_ibp2(mesh, f, bad, 1.0), PreconditionError);
}

TEST_CASE("poisson solve is self adjoint") {
  const Mesh1D mesh = Mesh1D::uniform(1.0, 96);
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    Field f(mesh.ncells), g(mesh.ncells);
    for (double& v : f) v = uni(rng);
    for (double& v : g) v = uni(rng);
    for (Field* p : {&f, &g}) {
      double mean = 0.0;
      for (double v : *p) mean += v;
      mean /= mesh.ncells;
      for (double& v : *p) v -= mean;
    }
    const Field sf = solve_poisson(mesh, f, 1.0).phi;
    const Field sg = solve_poisson(mesh, g, 1.0).phi;
    Field fsg(mesh.ncells), gsf(mesh.ncells);
    for (int j = 0; j < mesh.ncells; ++j) {
      fsg[j] = f[j] * sg[j];
      gsf[j] = g[j] * sf[j];
    }
    const double a = integrate(mesh, fsg);
    const double b = integrate(mesh, gsf);
    CHECK(std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)}));
  }
}
