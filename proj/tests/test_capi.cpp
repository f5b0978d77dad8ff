#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstring>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "eplab.h"

namespace {

struct ConfigHandle {
  eplab_config* cfg = nullptr;
  ~ConfigHandle() { eplab_config_free(cfg); }
};

std::string get_key(const eplab_config* cfg, const char* key) {
  char buf[256];
  REQUIRE(eplab_config_get(cfg, key, buf, sizeof buf) == EPLAB_OK);
  return buf;
}

}  // namespace

TEST_CASE("version and status names are stable strings") {
  const char* v = eplab_version();
  REQUIRE(v != nullptr);
  CHECK(std::strlen(v) >= 5);  // "x.y.z"
  CHECK(std::string(eplab_status_name(EPLAB_OK)) == "ok");
  CHECK(std::strlen(eplab_status_name(EPLAB_ERR_CONFIG)) > 0);
  CHECK(std::strlen(eplab_status_name(EPLAB_ERR_VACUUM)) > 0);
  CHECK(std::strlen(eplab_status_name((eplab_status)999)) > 0);
}

TEST_CASE("default config round-trips through set and get") {
  ConfigHandle h;
  REQUIRE(eplab_config_default(&h.cfg) == EPLAB_OK);
  CHECK(get_key(h.cfg, "system") == "bep");
  CHECK(get_key(h.cfg, "ncells") == "200");

  CHECK(eplab_config_set(h.cfg, "ncells", "64") == EPLAB_OK);
  CHECK(get_key(h.cfg, "ncells") == "64");
  CHECK(eplab_config_set(h.cfg, "system", "euler") == EPLAB_OK);
  CHECK(get_key(h.cfg, "system") == "euler");

  // A rejected override names the key and leaves the config untouched.
  CHECK(eplab_config_set(h.cfg, "eps", "-2") == EPLAB_ERR_CONFIG);
  CHECK(std::string(eplab_last_error()).find("eps") != std::string::npos);
  CHECK(get_key(h.cfg, "eps") == "1");
  CHECK(get_key(h.cfg, "ncells") == "64");

  char tiny[3];
  CHECK(eplab_config_get(h.cfg, "ncells", tiny, sizeof tiny) == EPLAB_OK);
  CHECK(std::string(tiny) == "64");  // fits exactly with the NUL

  CHECK(eplab_config_get(h.cfg, "no_such_key", tiny, sizeof tiny) ==
        EPLAB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("null arguments are rejected, not dereferenced") {
  CHECK(eplab_config_default(nullptr) == EPLAB_ERR_INVALID_ARGUMENT);
  CHECK(eplab_config_parse_string(nullptr, nullptr) ==
        EPLAB_ERR_INVALID_ARGUMENT);
  CHECK(eplab_config_set(nullptr, "a", "b") == EPLAB_ERR_INVALID_ARGUMENT);
  ConfigHandle h;
  REQUIRE(eplab_config_default(&h.cfg) == EPLAB_OK);
  CHECK(eplab_config_set(h.cfg, nullptr, "b") == EPLAB_ERR_INVALID_ARGUMENT);
  CHECK(eplab_config_get(h.cfg, "eps", nullptr, 8) ==
        EPLAB_ERR_INVALID_ARGUMENT);
  CHECK(eplab_run(nullptr, nullptr) == EPLAB_ERR_INVALID_ARGUMENT);
  eplab_config_free(nullptr);  // must be a no-op
}

TEST_CASE("parse failures report every violation") {
  ConfigHandle h;
  const char* text = "system = bep\neps = 0\nwhatever = 3\n";
  CHECK(eplab_config_parse_string(text, &h.cfg) == EPLAB_ERR_CONFIG);
  const std::string msg = eplab_last_error();
  CHECK(msg.find("eps") != std::string::npos);
  CHECK(msg.find("whatever") != std::string::npos);
  CHECK(h.cfg == nullptr);

  CHECK(eplab_config_parse_file("/no/such/file.cfg", &h.cfg) == EPLAB_ERR_IO);

  CHECK(eplab_config_parse_string("system = ae\ndelta = 0\n", &h.cfg) ==
        EPLAB_OK);
  REQUIRE(h.cfg != nullptr);
  CHECK(get_key(h.cfg, "delta") == "0");
  CHECK(std::string(eplab_last_error()).empty());
}

TEST_CASE("bad verify name is a precondition failure") {
  ConfigHandle h;
  REQUIRE(eplab_config_default(&h.cfg) == EPLAB_OK);
  int passed = -1;
  CHECK(eplab_verify(h.cfg, "nonsense", &passed, nullptr, 0) ==
        EPLAB_ERR_PRECONDITION);
  CHECK(eplab_verify(h.cfg, "mms", nullptr, nullptr, 0) ==
        EPLAB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("a small run produces its three files") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "eplab_capi_run";
  fs::remove_all(dir);
  ConfigHandle h;
  REQUIRE(eplab_config_default(&h.cfg) == EPLAB_OK);
  REQUIRE(eplab_config_set(h.cfg, "ncells", "32") == EPLAB_OK);
  REQUIRE(eplab_config_set(h.cfg, "t_end", "0.005") == EPLAB_OK);
  REQUIRE(eplab_config_set(h.cfg, "eps", "0.1") == EPLAB_OK);
  const eplab_status st = eplab_run(h.cfg, dir.string().c_str());
  CHECK(std::string(eplab_last_error()).empty());
  REQUIRE(st == EPLAB_OK);
  CHECK(fs::exists(dir / "fields_initial.csv"));
  CHECK(fs::exists(dir / "fields_final.csv"));
  CHECK(fs::exists(dir / "energy.csv"));
  fs::remove_all(dir);
}

TEST_CASE("a small sweep reports a finite rate and a summary") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "eplab_capi_sweep";
  fs::remove_all(dir);
  ConfigHandle h;
  REQUIRE(eplab_config_default(&h.cfg) == EPLAB_OK);
  REQUIRE(eplab_config_set(h.cfg, "ncells", "40") == EPLAB_OK);
  REQUIRE(eplab_config_set(h.cfg, "t_end", "0.01") == EPLAB_OK);
  double slope = 0.0, r2 = 0.0;
  char summary[4096];
  const eplab_status st = eplab_sweep(h.cfg, "zem", dir.string().c_str(),
                                      &slope, &r2, summary, sizeof summary);
  CHECK(std::string(eplab_last_error()).empty());
  REQUIRE(st == EPLAB_OK);
  CHECK(std::isfinite(slope));
  CHECK(r2 >= 0.0);
  CHECK(std::strlen(summary) > 0);
  CHECK(fs::exists(dir / "sweep_zem.csv"));
  CHECK(fs::exists(dir / "releng_zem_0.csv"));

  CHECK(eplab_sweep(h.cfg, "sideways", dir.string().c_str(), &slope, &r2,
                    nullptr, 0) == EPLAB_ERR_PRECONDITION);
  fs::remove_all(dir);
}
