#pragma once

#include "eplab/errors.hpp"

namespace eplab {

// Power-law pressure law P(r) = k r^gamma together with the matching
// internal-energy density H(r) = k r^gamma / (gamma - 1). The pair
// satisfies r H''(r) = P'(r) and r H'(r) = H(r) + P(r), which is what
// the energy bookkeeping downstream relies on.
struct EosSpec {
  double gamma = 2.0;
  double k = 1.0;
};

// Throws DomainError unless gamma > 1 and k > 0.
void validate(const EosSpec& spec);

double pressure(const EosSpec& spec, double r);        // r >= 0
double pressure_prime(const EosSpec& spec, double r);  // r > 0
double internal_energy(const EosSpec& spec, double r); // r >= 0
double h_prime(const EosSpec& spec, double r);         // r > 0
double h_double_prime(const EosSpec& spec, double r);  // r > 0 (r = 0 ok if gamma >= 2)
double h_prime_inverse(const EosSpec& spec, double w); // w > 0
double sound_speed(const EosSpec& spec, double r);     // sqrt(P'(r)), r >= 0

enum class RelativeKind { internal_energy, pressure };

// Second-order Taylor remainder F(r | rbar) = F(r) - F(rbar) - F'(rbar)(r - rbar)
// for F = H or F = P. Nonnegative whenever F is convex, i.e. always for H,
// and for P when gamma >= 1. Requires rbar > 0, r >= 0.
double relative_quantity(RelativeKind kind, const EosSpec& spec, double r,
                         double rbar);

}  // namespace eplab
