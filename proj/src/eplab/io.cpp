#include "eplab/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace eplab {

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void ensure_directory(const std::string& path) {
  std::error_code ec;
  std::filesystem::create_directories(path, ec);
  if (ec)
    throw IoError("cannot create directory '" + path + "': " + ec.message());
}

namespace {

std::ofstream open_csv(const std::string& path, const ConfigEcho& echo) {
  std::ofstream out(path, std::ios::binary);  // keep \n on every platform
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  for (const auto& [key, value] : echo) out << "# " << key << " = " << value << "\n";
  return out;
}

void finish_csv(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace

void write_field_csv(const std::string& path, const ConfigEcho& echo,
                     const Mesh1D& mesh, const Field& rho, const Field& u,
                     const Field& n, const Field& v, const Field& phi) {
  require_length(rho, mesh.ncells, "write_field_csv");
  require_length(u, mesh.ncells, "write_field_csv");
  require_length(n, mesh.ncells, "write_field_csv");
  require_length(v, mesh.ncells, "write_field_csv");
  require_length(phi, mesh.ncells, "write_field_csv");
  std::ofstream out = open_csv(path, echo);
  out << "x,rho,u,n,v,phi\n";
  for (int j = 0; j < mesh.ncells; ++j)
    out << format_g17(mesh.center(j)) << ',' << format_g17(rho[j]) << ','
        << format_g17(u[j]) << ',' << format_g17(n[j]) << ','
        << format_g17(v[j]) << ',' << format_g17(phi[j]) << '\n';
  finish_csv(out, path);
}

void write_energy_csv(const std::string& path, const ConfigEcho& echo,
                      const std::vector<EnergySample>& samples) {
  std::ofstream out = open_csv(path, echo);
  out << "t,kin_ion,int_ion,kin_ele,int_ele,field,total\n";
  for (const EnergySample& s : samples)
    out << format_g17(s.t) << ',' << format_g17(s.e.kin_ion) << ','
        << format_g17(s.e.int_ion) << ',' << format_g17(s.e.kin_ele) << ','
        << format_g17(s.e.int_ele) << ',' << format_g17(s.e.field) << ','
        << format_g17(s.e.total) << '\n';
  finish_csv(out, path);
}

void write_releng_csv(const std::string& path, const ConfigEcho& echo,
                      const RelEnergySeries& series) {
  std::ofstream out = open_csv(path, echo);
  out << "t,Phi,rk_ion,ri_ion,rk_ele,ri_ele,field,sig1,sig2,sig3,sigstar\n";
  for (const RelEnergySample& s : series.samples)
    out << format_g17(s.t) << ',' << format_g17(s.h.total) << ','
        << format_g17(s.h.rk_ion) << ',' << format_g17(s.h.ri_ion) << ','
        << format_g17(s.h.rk_ele) << ',' << format_g17(s.h.ri_ele) << ','
        << format_g17(s.h.field) << ',' << format_g17(s.sig1) << ','
        << format_g17(s.sig2) << ',' << format_g17(s.sig3) << ','
        << format_g17(s.sigstar) << '\n';
  finish_csv(out, path);
}

void write_sweep_csv(const std::string& path, const ConfigEcho& echo,
                     const SweepResult& result) {
  std::ofstream out = open_csv(path, echo);
  out << "eps,delta,ncells,phi0,phi_sup,slope,r2\n";
  for (const SweepEntry& e : result.entries)
    out << format_g17(e.eps) << ',' << format_g17(e.delta) << ',' << e.ncells
        << ',' << format_g17(e.phi0) << ',' << format_g17(e.phi_sup) << ','
        << format_g17(result.fit.slope) << ','
        << format_g17(result.fit.r_squared) << '\n';
  finish_csv(out, path);
}

}  // namespace eplab
