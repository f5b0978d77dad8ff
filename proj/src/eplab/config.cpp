#include "eplab/config.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace eplab {

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

bool parse_double(const std::string& s, double* out) {
  const std::string t = trim(s);
  if (t.empty()) return false;
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size()) return false;
  *out = v;
  return true;
}

bool parse_long(const std::string& s, long* out) {
  const std::string t = trim(s);
  if (t.empty()) return false;
  char* end = nullptr;
  const long v = std::strtol(t.c_str(), &end, 10);
  if (end != t.c_str() + t.size()) return false;
  *out = v;
  return true;
}

struct Validator {
  std::vector<std::string> violations;

  void set_double(const std::string& key, const std::string& raw, double* dst) {
    if (!parse_double(raw, dst))
      violations.push_back(key + ": not a number: '" + raw + "'");
  }
  void set_long(const std::string& key, const std::string& raw, long* dst) {
    if (!parse_long(raw, dst))
      violations.push_back(key + ": not an integer: '" + raw + "'");
  }
  void set_int(const std::string& key, const std::string& raw, int* dst) {
    long v = 0;
    if (!parse_long(raw, &v))
      violations.push_back(key + ": not an integer: '" + raw + "'");
    else
      *dst = static_cast<int>(v);
  }

  // Applies one key; returns false for unknown keys.
  bool apply(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "system") {
      const std::string v = trim(value);
      if (v == "bep")
        cfg.system = SystemKind::bep;
      else if (v == "ae")
        cfg.system = SystemKind::ae;
      else if (v == "euler")
        cfg.system = SystemKind::euler;
      else
        violations.push_back("system: must be one of bep, ae, euler (got '" +
                             v + "')");
    } else if (key == "eps") {
      set_double(key, value, &cfg.eps);
    } else if (key == "delta") {
      set_double(key, value, &cfg.delta);
    } else if (key == "gamma1") {
      set_double(key, value, &cfg.gamma1);
    } else if (key == "k1") {
      set_double(key, value, &cfg.k1);
    } else if (key == "gamma2") {
      set_double(key, value, &cfg.gamma2);
    } else if (key == "k2") {
      set_double(key, value, &cfg.k2);
    } else if (key == "length") {
      set_double(key, value, &cfg.length);
    } else if (key == "ncells") {
      set_int(key, value, &cfg.ncells);
    } else if (key == "cfl") {
      set_double(key, value, &cfg.cfl);
    } else if (key == "t_end") {
      set_double(key, value, &cfg.t_end);
    } else if (key == "amplitude") {
      set_double(key, value, &cfg.amplitude);
    } else if (key == "output_dir") {
      const std::string v = trim(value);
      if (v.empty())
        violations.push_back("output_dir: must not be empty");
      else
        cfg.output_dir = v;
    } else if (key == "seed") {
      set_long(key, value, &cfg.seed);
    } else {
      return false;
    }
    return true;
  }

  void check_ranges(const RunConfig& cfg) {
    auto require = [&](bool ok, const char* msg) {
      if (!ok) violations.push_back(msg);
    };
    require(cfg.eps > 0.0, "eps: must be > 0");
    require(cfg.delta >= 0.0, "delta: must be >= 0");
    require(cfg.gamma1 > 1.0, "gamma1: must be > 1");
    require(cfg.k1 > 0.0, "k1: must be > 0");
    require(cfg.gamma2 > 1.0, "gamma2: must be > 1");
    require(cfg.k2 > 0.0, "k2: must be > 0");
    require(cfg.length > 0.0, "length: must be > 0");
    require(cfg.ncells >= 2, "ncells: must be at least 2");
    require(cfg.cfl > 0.0 && cfg.cfl <= 1.0, "cfl: must sit in (0, 1]");
    require(cfg.t_end > 0.0, "t_end: must be > 0");
    require(cfg.amplitude >= 0.0 && cfg.amplitude < 0.5,
            "amplitude: must sit in [0, 0.5)");
  }
};

}  // namespace

SchemeConfig RunConfig::scheme() const {
  SchemeConfig s;
  s.cfl = cfl;
  s.end_time = t_end;
  return s;
}

const char* system_name(SystemKind kind) {
  switch (kind) {
    case SystemKind::bep:
      return "bep";
    case SystemKind::ae:
      return "ae";
    case SystemKind::euler:
      return "euler";
  }
  return "unknown";
}

std::vector<std::pair<std::string, std::string>> RunConfig::resolved() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.emplace_back("system", system_name(system));
  out.emplace_back("eps", format_double(eps));
  out.emplace_back("delta", format_double(delta));
  out.emplace_back("gamma1", format_double(gamma1));
  out.emplace_back("k1", format_double(k1));
  out.emplace_back("gamma2", format_double(gamma2));
  out.emplace_back("k2", format_double(k2));
  out.emplace_back("length", format_double(length));
  out.emplace_back("ncells", std::to_string(ncells));
  out.emplace_back("cfl", format_double(cfl));
  out.emplace_back("t_end", format_double(t_end));
  out.emplace_back("amplitude", format_double(amplitude));
  out.emplace_back("output_dir", output_dir);
  out.emplace_back("seed", std::to_string(seed));
  return out;
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  Validator v;
  std::map<std::string, int> seen;
  bool has_system = false;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      v.violations.push_back("line " + std::to_string(lineno) +
                             ": expected key = value");
      continue;
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) {
      v.violations.push_back("line " + std::to_string(lineno) + ": empty key");
      continue;
    }
    if (++seen[key] > 1) {
      v.violations.push_back(key + ": duplicate key");
      continue;
    }
    if (key == "system") has_system = true;
    if (!v.apply(cfg, key, value))
      v.violations.push_back(key + ": unknown key");
  }

  if (!has_system) v.violations.push_back("system: required key is missing");
  v.check_ranges(cfg);
  if (!v.violations.empty()) throw ConfigError(v.violations);
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  std::ostringstream body;
  body << in.rdbuf();
  return parse_config(body.str());
}

void apply_override(RunConfig& cfg, const std::string& key,
                    const std::string& value) {
  RunConfig next = cfg;
  Validator v;
  if (!v.apply(next, trim(key), value))
    v.violations.push_back(trim(key) + ": unknown key");
  v.check_ranges(next);
  if (!v.violations.empty()) throw ConfigError(v.violations);
  cfg = next;
}

}  // namespace eplab
