#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eplab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // failed check or runtime error
constexpr int kExitConfig = 2;   // invalid configuration

struct ConfigHandle {
  eplab_config* ptr = nullptr;
  ~ConfigHandle() { eplab_config_free(ptr); }
};

int report_error(eplab_status status) {
  std::fprintf(stderr, "error (%s): %s\n", eplab_status_name(status),
               eplab_last_error());
  return status == EPLAB_ERR_CONFIG ? kExitConfig : kExitFailure;
}

// Builds the config from an optional file plus --set overrides.
int build_config(const std::string& config_path,
                 const std::vector<std::string>& overrides,
                 ConfigHandle& handle) {
  eplab_status status =
      config_path.empty()
          ? eplab_config_default(&handle.ptr)
          : eplab_config_parse_file(config_path.c_str(), &handle.ptr);
  if (status != EPLAB_OK) return report_error(status);
  for (const std::string& kv : overrides) {
    const size_t eq = kv.find('=');
    if (eq == std::string::npos) {
      std::fprintf(stderr, "error (config): --set expects key=value, got '%s'\n",
                   kv.c_str());
      return kExitConfig;
    }
    status = eplab_config_set(handle.ptr, kv.substr(0, eq).c_str(),
                              kv.substr(eq + 1).c_str());
    if (status != EPLAB_OK) return report_error(status);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"1-d two-fluid Euler-Poisson laboratory"};
  app.require_subcommand(1);

  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_dir;
  app.add_option("--config", config_path, "key = value config file")
      ->check(CLI::ExistingFile);
  app.add_option("--set", overrides, "override one key (key=value)");

  // --config / --set live on the parent; subcommands hand unmatched
  // options back up so they work in any position.
  CLI::App* run = app.add_subcommand("run", "integrate one system to t_end");
  run->fallthrough();
  run->add_option("--out", out_dir, "output directory (default from config)");

  CLI::App* sweep =
      app.add_subcommand("sweep", "limit-distance sweep with fitted rate");
  sweep->fallthrough();
  std::string limit;
  sweep->add_option("--limit", limit, "zem or joint")
      ->required()
      ->check(CLI::IsMember({"zem", "joint"}));
  sweep->add_option("--out", out_dir, "output directory (default from config)");

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->fallthrough();
  std::string check = "all";
  verify->add_option(
      "--check", check,
      "mms, ibp, energy, releng-identity, leading-order, or all");

  CLI11_PARSE(app, argc, argv);

  ConfigHandle cfg;
  const int config_rc = build_config(config_path, overrides, cfg);
  if (config_rc != kExitOk) return config_rc;

  const char* out = out_dir.empty() ? nullptr : out_dir.c_str();

  if (run->parsed()) {
    const eplab_status status = eplab_run(cfg.ptr, out);
    if (status != EPLAB_OK) return report_error(status);
    std::printf("run complete\n");
    return kExitOk;
  }

  if (sweep->parsed()) {
    double slope = 0.0, r2 = 0.0;
    std::vector<char> summary(16384);
    const eplab_status status = eplab_sweep(cfg.ptr, limit.c_str(), out,
                                            &slope, &r2, summary.data(),
                                            summary.size());
    if (status != EPLAB_OK) return report_error(status);
    std::printf("%s", summary.data());
    return kExitOk;
  }

  // verify
  int passed = 0;
  std::vector<char> report(65536);
  const eplab_status status = eplab_verify(cfg.ptr, check.c_str(), &passed,
                                           report.data(), report.size());
  if (status != EPLAB_OK) return report_error(status);
  std::printf("%s", report.data());
  return passed ? kExitOk : kExitFailure;
}
