#include "eplab/mms.hpp"

#include <cmath>

namespace eplab {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Shared time factors: density-like fields ride on f, velocity-like
// fields on g.
double tf(bool dep, double t) { return dep ? std::cos(t) : 1.0; }
double tfd(bool dep, double t) { return dep ? -std::sin(t) : 0.0; }
double tg(bool dep, double t) { return dep ? std::sin(t) : 1.0; }
double tgd(bool dep, double t) { return dep ? std::cos(t) : 0.0; }

void check_wall_compatible(double amp, double phase, const char* what) {
  if (std::abs(amp * std::sin(phase)) > 1e-12 * (1.0 + std::abs(amp)))
    throw PreconditionError(std::string(what) +
                            ": velocity shape does not vanish at the walls");
}

}  // namespace

// ---- single species -------------------------------------------------

double ManufacturedEuler::rho(double x, double t) const {
  return rho0 + arho * std::cos(kPi * x / length) * tf(time_dependent, t);
}
double ManufacturedEuler::rho_x(double x, double t) const {
  return -arho * (kPi / length) * std::sin(kPi * x / length) *
         tf(time_dependent, t);
}
double ManufacturedEuler::rho_t(double x, double t) const {
  return arho * std::cos(kPi * x / length) * tfd(time_dependent, t);
}
double ManufacturedEuler::u(double x, double t) const {
  return au * std::sin(kPi * x / length + phase) * tg(time_dependent, t);
}
double ManufacturedEuler::u_x(double x, double t) const {
  return au * (kPi / length) * std::cos(kPi * x / length + phase) *
         tg(time_dependent, t);
}
double ManufacturedEuler::u_t(double x, double t) const {
  return au * std::sin(kPi * x / length + phase) * tgd(time_dependent, t);
}

EulerSourceArrays mms_source(const ManufacturedEuler& man, const Mesh1D& mesh,
                             double t, const EosSpec& eos1,
                             const EosSpec& eos2) {
  check_wall_compatible(man.au, man.phase, "mms_source(euler)");
  EulerSourceArrays out;
  out.rho.resize(mesh.ncells);
  out.m.resize(mesh.ncells);
  for (int j = 0; j < mesh.ncells; ++j) {
    const double x = mesh.center(j);
    const double r = man.rho(x, t), rx = man.rho_x(x, t), rt = man.rho_t(x, t);
    const double u = man.u(x, t), ux = man.u_x(x, t), ut = man.u_t(x, t);
    if (!(r > 0.0))
      throw DomainError("mms_source(euler): manufactured density nonpositive");
    const double dp = pressure_prime(eos1, r) + pressure_prime(eos2, r);
    out.rho[j] = rt + rx * u + r * ux;
    out.m[j] = rt * u + r * ut + rx * u * u + 2.0 * r * u * ux + dp * rx;
  }
  return out;
}

// ---- two species with a potential -----------------------------------

double ManufacturedBep::rho(double x, double t) const {
  return rho0 + arho * std::cos(kPi * x / length) * tf(time_dependent, t);
}
double ManufacturedBep::rho_x(double x, double t) const {
  return -arho * (kPi / length) * std::sin(kPi * x / length) *
         tf(time_dependent, t);
}
double ManufacturedBep::rho_t(double x, double t) const {
  return arho * std::cos(kPi * x / length) * tfd(time_dependent, t);
}
double ManufacturedBep::u(double x, double t) const {
  return au * std::sin(kPi * x / length + phase) * tg(time_dependent, t);
}
double ManufacturedBep::u_x(double x, double t) const {
  return au * (kPi / length) * std::cos(kPi * x / length + phase) *
         tg(time_dependent, t);
}
double ManufacturedBep::u_t(double x, double t) const {
  return au * std::sin(kPi * x / length + phase) * tgd(time_dependent, t);
}
double ManufacturedBep::n(double x, double t) const {
  const double aneff = arho - delta * aphi * (kPi / length) * (kPi / length);
  return rho0 + aneff * std::cos(kPi * x / length) * tf(time_dependent, t);
}
double ManufacturedBep::n_x(double x, double t) const {
  const double aneff = arho - delta * aphi * (kPi / length) * (kPi / length);
  return -aneff * (kPi / length) * std::sin(kPi * x / length) *
         tf(time_dependent, t);
}
double ManufacturedBep::n_t(double x, double t) const {
  const double aneff = arho - delta * aphi * (kPi / length) * (kPi / length);
  return aneff * std::cos(kPi * x / length) * tfd(time_dependent, t);
}
double ManufacturedBep::v(double x, double t) const {
  return av * std::sin(kPi * x / length + phase) * tg(time_dependent, t);
}
double ManufacturedBep::v_x(double x, double t) const {
  return av * (kPi / length) * std::cos(kPi * x / length + phase) *
         tg(time_dependent, t);
}
double ManufacturedBep::v_t(double x, double t) const {
  return av * std::sin(kPi * x / length + phase) * tgd(time_dependent, t);
}
double ManufacturedBep::phi(double x, double t) const {
  return aphi * std::cos(kPi * x / length) * tf(time_dependent, t);
}
double ManufacturedBep::phi_x(double x, double t) const {
  return -aphi * (kPi / length) * std::sin(kPi * x / length) *
         tf(time_dependent, t);
}

BepSourceArrays mms_source(const ManufacturedBep& man, const Mesh1D& mesh,
                           double t, const EosSpec& eos1,
                           const EosSpec& eos2) {
  check_wall_compatible(man.au, man.phase, "mms_source(bep) ion");
  check_wall_compatible(man.av, man.phase, "mms_source(bep) electron");
  if (!(man.eps > 0.0))
    throw DomainError("mms_source(bep): eps must be positive");
  BepSourceArrays out;
  out.rho_i.resize(mesh.ncells);
  out.m_i.resize(mesh.ncells);
  out.rho_e.resize(mesh.ncells);
  out.m_e.resize(mesh.ncells);
  const double inv_eps = 1.0 / man.eps;
  for (int j = 0; j < mesh.ncells; ++j) {
    const double x = mesh.center(j);
    const double r = man.rho(x, t), rx = man.rho_x(x, t), rt = man.rho_t(x, t);
    const double u = man.u(x, t), ux = man.u_x(x, t), ut = man.u_t(x, t);
    const double ne = man.n(x, t), nx = man.n_x(x, t), nt = man.n_t(x, t);
    const double v = man.v(x, t), vx = man.v_x(x, t), vt = man.v_t(x, t);
    const double px = man.phi_x(x, t);
    if (!(r > 0.0) || !(ne > 0.0))
      throw DomainError("mms_source(bep): manufactured density nonpositive");
    out.rho_i[j] = rt + rx * u + r * ux;
    out.m_i[j] = rt * u + r * ut + rx * u * u + 2.0 * r * u * ux +
                 pressure_prime(eos1, r) * rx + r * px;
    out.rho_e[j] = nt + nx * v + ne * vx;
    out.m_e[j] = nt * v + ne * vt + nx * v * v + 2.0 * ne * v * vx +
                 inv_eps * pressure_prime(eos2, ne) * nx - inv_eps * ne * px;
  }
  return out;
}

// ---- adiabatic electrons ---------------------------------------------

namespace {

// Spatial/temporal derivatives of the cosine density shape, bundled so
// the chain-rule expressions below stay readable.
struct ShapeDerivs {
  double n, nx, nxx, nxxx, nt, nxt, nxxt;
};

ShapeDerivs ae_shape(const ManufacturedAe& man, double x, double t) {
  const double om = kPi / man.length;
  const double f = tf(man.time_dependent, t);
  const double fd = tfd(man.time_dependent, t);
  const double c = std::cos(om * x), s = std::sin(om * x);
  ShapeDerivs d;
  d.n = man.n0 + man.an * c * f;
  d.nx = -man.an * om * s * f;
  d.nxx = -man.an * om * om * c * f;
  d.nxxx = man.an * om * om * om * s * f;
  d.nt = man.an * c * fd;
  d.nxt = -man.an * om * s * fd;
  d.nxxt = -man.an * om * om * c * fd;
  return d;
}

// H2' and its next three derivatives at n.
struct HDerivs {
  double h2, h3, h4, h5;  // H'', H''', H'''', H'''''
};

HDerivs h_derivs(const EosSpec& e, double n) {
  const double g = e.gamma, k = e.k;
  HDerivs h;
  h.h2 = k * g * std::pow(n, g - 2.0);
  h.h3 = k * g * (g - 2.0) * std::pow(n, g - 3.0);
  h.h4 = k * g * (g - 2.0) * (g - 3.0) * std::pow(n, g - 4.0);
  h.h5 = k * g * (g - 2.0) * (g - 3.0) * (g - 4.0) * std::pow(n, g - 5.0);
  return h;
}

}  // namespace

double ManufacturedAe::n(double x, double t) const { return ae_shape(*this, x, t).n; }
double ManufacturedAe::n_x(double x, double t) const { return ae_shape(*this, x, t).nx; }
double ManufacturedAe::n_t(double x, double t) const { return ae_shape(*this, x, t).nt; }

double ManufacturedAe::rho(double x, double t) const {
  const ShapeDerivs d = ae_shape(*this, x, t);
  const HDerivs h = h_derivs(eos2, d.n);
  const double wxx = h.h3 * d.nx * d.nx + h.h2 * d.nxx;
  return d.n - delta * wxx;
}
double ManufacturedAe::rho_x(double x, double t) const {
  const ShapeDerivs d = ae_shape(*this, x, t);
  const HDerivs h = h_derivs(eos2, d.n);
  const double wxxx = h.h4 * d.nx * d.nx * d.nx + 3.0 * h.h3 * d.nx * d.nxx +
                      h.h2 * d.nxxx;
  return d.nx - delta * wxxx;
}
double ManufacturedAe::rho_t(double x, double t) const {
  const ShapeDerivs d = ae_shape(*this, x, t);
  const HDerivs h = h_derivs(eos2, d.n);
  const double wxxt = h.h4 * d.nt * d.nx * d.nx + 2.0 * h.h3 * d.nx * d.nxt +
                      h.h3 * d.nt * d.nxx + h.h2 * d.nxxt;
  return d.nt - delta * wxxt;
}
double ManufacturedAe::u(double x, double t) const {
  return au * std::sin(kPi * x / length + phase) * tg(time_dependent, t);
}
double ManufacturedAe::u_x(double x, double t) const {
  return au * (kPi / length) * std::cos(kPi * x / length + phase) *
         tg(time_dependent, t);
}
double ManufacturedAe::u_t(double x, double t) const {
  return au * std::sin(kPi * x / length + phase) * tgd(time_dependent, t);
}
double ManufacturedAe::w_x(double x, double t) const {
  const ShapeDerivs d = ae_shape(*this, x, t);
  return h_derivs(eos2, d.n).h2 * d.nx;
}

EulerSourceArrays mms_source(const ManufacturedAe& man, const Mesh1D& mesh,
                             double t, const EosSpec& eos1) {
  check_wall_compatible(man.au, man.phase, "mms_source(ae)");
  EulerSourceArrays out;
  out.rho.resize(mesh.ncells);
  out.m.resize(mesh.ncells);
  for (int j = 0; j < mesh.ncells; ++j) {
    const double x = mesh.center(j);
    const double r = man.rho(x, t), rx = man.rho_x(x, t), rt = man.rho_t(x, t);
    const double u = man.u(x, t), ux = man.u_x(x, t), ut = man.u_t(x, t);
    if (!(r > 0.0) || !(man.n(x, t) > 0.0))
      throw DomainError("mms_source(ae): manufactured density nonpositive");
    out.rho[j] = rt + rx * u + r * ux;
    out.m[j] = rt * u + r * ut + rx * u * u + 2.0 * r * u * ux +
               pressure_prime(eos1, r) * rx + r * man.w_x(x, t);
  }
  return out;
}

}  // namespace eplab
