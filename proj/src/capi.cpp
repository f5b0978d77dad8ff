#include "eplab.h"

#include <cstring>
#include <string>

#include "eplab/checks.hpp"
#include "eplab/config.hpp"
#include "eplab/errors.hpp"
#include "eplab/runner.hpp"

namespace {

thread_local std::string g_last_error;

void copy_out(const std::string& text, char* buf, size_t len) {
  if (!buf || len == 0) return;
  const size_t n = std::min(text.size(), len - 1);
  std::memcpy(buf, text.data(), n);
  buf[n] = '\0';
}

eplab_status fail(eplab_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

// Runs the body, translating exceptions into status codes.
template <typename Fn>
eplab_status guarded(Fn&& body) {
  try {
    body();
    g_last_error.clear();
    return EPLAB_OK;
  } catch (const eplab::ConfigError& e) {
    return fail(EPLAB_ERR_CONFIG, e.what());
  } catch (const eplab::DomainError& e) {
    return fail(EPLAB_ERR_DOMAIN, e.what());
  } catch (const eplab::PreconditionError& e) {
    return fail(EPLAB_ERR_PRECONDITION, e.what());
  } catch (const eplab::CompatibilityError& e) {
    return fail(EPLAB_ERR_COMPATIBILITY, e.what());
  } catch (const eplab::NonconvergenceError& e) {
    return fail(EPLAB_ERR_NONCONVERGENCE, e.what());
  } catch (const eplab::TimestepCollapseError& e) {
    return fail(EPLAB_ERR_TIMESTEP_COLLAPSE, e.what());
  } catch (const eplab::VacuumError& e) {
    return fail(EPLAB_ERR_VACUUM, e.what());
  } catch (const eplab::IoError& e) {
    return fail(EPLAB_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(EPLAB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(EPLAB_ERR_INTERNAL, "unknown error");
  }
}

}  // namespace

struct eplab_config {
  eplab::RunConfig cfg;
};

extern "C" {

const char* eplab_version(void) { return "1.0.0"; }

const char* eplab_status_name(eplab_status status) {
  switch (status) {
    case EPLAB_OK: return "ok";
    case EPLAB_ERR_CONFIG: return "config";
    case EPLAB_ERR_DOMAIN: return "domain";
    case EPLAB_ERR_PRECONDITION: return "precondition";
    case EPLAB_ERR_COMPATIBILITY: return "compatibility";
    case EPLAB_ERR_NONCONVERGENCE: return "nonconvergence";
    case EPLAB_ERR_TIMESTEP_COLLAPSE: return "timestep-collapse";
    case EPLAB_ERR_VACUUM: return "vacuum";
    case EPLAB_ERR_IO: return "io";
    case EPLAB_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case EPLAB_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* eplab_last_error(void) { return g_last_error.c_str(); }

eplab_status eplab_config_default(eplab_config** out) {
  if (!out) return fail(EPLAB_ERR_INVALID_ARGUMENT, "out is null");
  return guarded([&] { *out = new eplab_config{eplab::RunConfig{}}; });
}

eplab_status eplab_config_parse_string(const char* text, eplab_config** out) {
  if (!text || !out)
    return fail(EPLAB_ERR_INVALID_ARGUMENT, "text/out is null");
  return guarded([&] {
    eplab::RunConfig cfg = eplab::parse_config(text);
    *out = new eplab_config{std::move(cfg)};
  });
}

eplab_status eplab_config_parse_file(const char* path, eplab_config** out) {
  if (!path || !out)
    return fail(EPLAB_ERR_INVALID_ARGUMENT, "path/out is null");
  return guarded([&] {
    eplab::RunConfig cfg = eplab::parse_config_file(path);
    *out = new eplab_config{std::move(cfg)};
  });
}

eplab_status eplab_config_set(eplab_config* cfg, const char* key,
                              const char* value) {
  if (!cfg || !key || !value)
    return fail(EPLAB_ERR_INVALID_ARGUMENT, "cfg/key/value is null");
  return guarded([&] {
    // Validate on a copy so a rejected override leaves cfg untouched.
    eplab::RunConfig next = cfg->cfg;
    eplab::apply_override(next, key, value);
    cfg->cfg = std::move(next);
  });
}

eplab_status eplab_config_get(const eplab_config* cfg, const char* key,
                              char* buf, size_t len) {
  if (!cfg || !key || !buf)
    return fail(EPLAB_ERR_INVALID_ARGUMENT, "cfg/key/buf is null");
  for (const auto& [k, v] : cfg->cfg.resolved()) {
    if (k == key) {
      copy_out(v, buf, len);
      g_last_error.clear();
      return EPLAB_OK;
    }
  }
  return fail(EPLAB_ERR_INVALID_ARGUMENT, std::string("unknown key: ") + key);
}

void eplab_config_free(eplab_config* cfg) { delete cfg; }

eplab_status eplab_run(const eplab_config* cfg, const char* output_dir) {
  if (!cfg) return fail(EPLAB_ERR_INVALID_ARGUMENT, "cfg is null");
  return guarded([&] {
    eplab::RunConfig run_cfg = cfg->cfg;
    if (output_dir) run_cfg.output_dir = output_dir;
    eplab::run_simulation(run_cfg);
  });
}

eplab_status eplab_sweep(const eplab_config* cfg, const char* limit,
                         const char* output_dir, double* slope, double* r2,
                         char* summary, size_t summary_len) {
  if (!cfg || !limit)
    return fail(EPLAB_ERR_INVALID_ARGUMENT, "cfg/limit is null");
  return guarded([&] {
    eplab::RunConfig run_cfg = cfg->cfg;
    if (output_dir) run_cfg.output_dir = output_dir;
    const eplab::SweepRunReport report =
        eplab::run_sweep_command(run_cfg, limit);
    if (slope) *slope = report.result.fit.slope;
    if (r2) *r2 = report.result.fit.r_squared;
    if (summary) copy_out(report.summary, summary, summary_len);
  });
}

eplab_status eplab_verify(const eplab_config* cfg, const char* check,
                          int* passed, char* report, size_t report_len) {
  if (!cfg || !check || !passed)
    return fail(EPLAB_ERR_INVALID_ARGUMENT, "cfg/check/passed is null");
  return guarded([&] {
    const std::vector<eplab::CheckResult> results =
        eplab::run_verify(cfg->cfg, check);
    bool all = true;
    std::string text;
    for (const eplab::CheckResult& r : results) {
      all = all && r.passed;
      text += r.name;
      text += r.passed ? ": pass\n" : ": FAIL\n";
      text += r.detail;
    }
    *passed = all ? 1 : 0;
    if (report) copy_out(text, report, report_len);
  });
}

}  // extern "C"
