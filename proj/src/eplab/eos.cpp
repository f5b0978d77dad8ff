#include "eplab/eos.hpp"

#include <cmath>
#include <string>

namespace eplab {

namespace {

void require_valid(const EosSpec& spec) { validate(spec); }

[[noreturn]] void bad_density(const char* fn, double r) {
  throw DomainError(std::string(fn) + ": density " + std::to_string(r) +
                    " outside domain");
}

}  // namespace

void validate(const EosSpec& spec) {
  if (!(spec.gamma > 1.0))
    throw DomainError("EosSpec: gamma must exceed 1, got " +
                      std::to_string(spec.gamma));
  if (!(spec.k > 0.0))
    throw DomainError("EosSpec: k must be positive, got " +
                      std::to_string(spec.k));
}

double pressure(const EosSpec& spec, double r) {
  require_valid(spec);
  if (!(r >= 0.0)) bad_density("pressure", r);
  return spec.k * std::pow(r, spec.gamma);
}

double pressure_prime(const EosSpec& spec, double r) {
  require_valid(spec);
  if (!(r > 0.0)) bad_density("pressure_prime", r);
  return spec.k * spec.gamma * std::pow(r, spec.gamma - 1.0);
}

double internal_energy(const EosSpec& spec, double r) {
  require_valid(spec);
  if (!(r >= 0.0)) bad_density("internal_energy", r);
  return spec.k * std::pow(r, spec.gamma) / (spec.gamma - 1.0);
}

double h_prime(const EosSpec& spec, double r) {
  require_valid(spec);
  if (!(r > 0.0)) bad_density("h_prime", r);
  return spec.k * spec.gamma / (spec.gamma - 1.0) * std::pow(r, spec.gamma - 1.0);
}

double h_double_prime(const EosSpec& spec, double r) {
  require_valid(spec);
  if (r == 0.0 && spec.gamma < 2.0)
    throw DomainError("h_double_prime: singular at r = 0 for gamma < 2");
  if (!(r >= 0.0)) bad_density("h_double_prime", r);
  return spec.k * spec.gamma * std::pow(r, spec.gamma - 2.0);
}

double h_prime_inverse(const EosSpec& spec, double w) {
  require_valid(spec);
  if (!(w > 0.0))
    throw DomainError("h_prime_inverse: w must be positive, got " +
                      std::to_string(w));
  const double gm1 = spec.gamma - 1.0;
  return std::pow(gm1 * w / (spec.k * spec.gamma), 1.0 / gm1);
}

double sound_speed(const EosSpec& spec, double r) {
  require_valid(spec);
  if (!(r >= 0.0)) bad_density("sound_speed", r);
  if (r == 0.0) return 0.0;
  return std::sqrt(pressure_prime(spec, r));
}

double relative_quantity(RelativeKind kind, const EosSpec& spec, double r,
                         double rbar) {
  require_valid(spec);
  if (!(rbar > 0.0))
    throw DomainError("relative_quantity: rbar must be positive");
  if (!(r >= 0.0)) bad_density("relative_quantity", r);
  if (kind == RelativeKind::internal_energy) {
    return internal_energy(spec, r) - internal_energy(spec, rbar) -
           h_prime(spec, rbar) * (r - rbar);
  }
  return pressure(spec, r) - pressure(spec, rbar) -
         pressure_prime(spec, rbar) * (r - rbar);
}

}  // namespace eplab
