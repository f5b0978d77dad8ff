#include <cmath>
#include <random>

#include "doctest.h"
#include "eplab/mesh.hpp"

using namespace eplab;

TEST_CASE("uniform mesh geometry") {
  const Mesh1D mesh = Mesh1D::uniform(2.0, 8);
  CHECK(mesh.dx == doctest::Approx(0.25));
  CHECK(mesh.center(0) == doctest::Approx(0.125));
  CHECK(mesh.center(7) == doctest::Approx(2.0 - 0.125));
  CHECK_THROWS_AS(Mesh1D::uniform(1.0, 1), DomainError);
  CHECK_THROWS_AS(Mesh1D::uniform(-1.0, 10), DomainError);
}

TEST_CASE("midpoint integration is exact for constants and linear in data") {
  const Mesh1D mesh = Mesh1D::uniform(3.0, 60);
  Field ones(mesh.ncells, 1.0);
  CHECK(integrate(mesh, ones) == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("gradient is second order on Neumann-compatible fields") {
  // cos(pi x / L) has zero slope at both walls; the mirror ghost value
  // equals the interior value exactly for the continuum field, so the
  // boundary stencil keeps second order.
  const double pi = 3.14159265358979323846;
  std::vector<double> errors;
  for (int n : {50, 100, 200}) {
    const Mesh1D mesh = Mesh1D::uniform(1.0, n);
    Field f(n);
    for (int j = 0; j < n; ++j) f[j] = std::cos(pi * mesh.center(j));
    const Field g = gradient(mesh, f);
    double worst = 0.0;
    for (int j = 0; j < n; ++j)
      worst = std::max(worst, std::abs(g[j] + pi * std::sin(pi * mesh.center(j))));
    errors.push_back(worst);
  }
  CHECK(errors[0] / errors[1] == doctest::Approx(4.0).epsilon(0.15));
  CHECK(errors[1] / errors[2] == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("gradient of a constant vanishes identically") {
  const Mesh1D mesh = Mesh1D::uniform(1.0, 33);
  Field f(mesh.ncells, 4.2);
  for (double g : gradient(mesh, f)) CHECK(g == 0.0);
}

TEST_CASE("divergence integrates to exactly zero for every field") {
  const Mesh1D mesh = Mesh1D::uniform(1.7, 128);
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> uni(-3.0, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    Field f(mesh.ncells);
    for (double& x : f) x = uni(rng);
    const Field d = divergence(mesh, f);
    // The odd-ghost closure makes the sum telescope; only floating
    // point rounding remains.
    CHECK(std::abs(integrate(mesh, d)) <= 1e-13);
  }
}

TEST_CASE("divergence is second order on wall-compatible fields") {
  const double pi = 3.14159265358979323846;
  std::vector<double> errors;
  for (int n : {50, 100, 200}) {
    const Mesh1D mesh = Mesh1D::uniform(1.0, n);
    Field f(n);
    for (int j = 0; j < n; ++j) f[j] = std::sin(pi * mesh.center(j));
    const Field d = divergence(mesh, f);
    double worst = 0.0;
    for (int j = 0; j < n; ++j)
      worst = std::max(worst, std::abs(d[j] - pi * std::cos(pi * mesh.center(j))));
    errors.push_back(worst);
  }
  CHECK(errors[0] / errors[1] == doctest::Approx(4.0).epsilon(0.15));
  CHECK(errors[1] / errors[2] == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("primitive recovery floors vacuum cells and reports them") {
  SpeciesState s;
  s.density = {1.0, 0.0, -1e-15, 2.0};
  s.momentum = {2.0, 1e-13, 0.0, -4.0};
  const VelocityRecovery rec = primitive_from_conserved(s, 1e-12);
  CHECK(rec.velocity[0] == doctest::Approx(2.0));
  CHECK(rec.velocity[1] == doctest::Approx(1e-13 / 1e-12));
  CHECK(rec.velocity[3] == doctest::Approx(-2.0));
  CHECK(rec.floored_cells == 2);
}

TEST_CASE("length mismatches are rejected") {
  const Mesh1D mesh = Mesh1D::uniform(1.0, 10);
  Field f(9, 0.0);
  CHECK_THROWS_AS(gradient(mesh, f), DomainError);
  CHECK_THROWS_AS(divergence(mesh, f), DomainError);
  CHECK_THROWS_AS(integrate(mesh, f), DomainError);
}
