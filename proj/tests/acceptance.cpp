// Acceptance gate: one line per criterion, exit 0 only if all pass.
#include <cstdio>
#include <exception>
#include <string>

#include "eplab/checks.hpp"

using namespace eplab;

namespace {

bool report(int number, const CheckResult& r) {
  std::printf("criterion %d (%s): %s\n", number, r.name.c_str(),
              r.passed ? "PASS" : "FAIL");
  if (!r.detail.empty()) std::fputs(r.detail.c_str(), stdout);
  std::fflush(stdout);
  return r.passed;
}

template <typename Fn>
bool guarded(int number, const char* name, Fn&& fn) {
  try {
    return report(number, fn());
  } catch (const std::exception& e) {
    std::printf("criterion %d (%s): FAIL\n  exception: %s\n", number, name,
                e.what());
    std::fflush(stdout);
    return false;
  }
}

}  // namespace

int main() {
  bool all = true;
  all &= guarded(1, "mass-conservation", [] { return check_conservation(); });
  all &= guarded(2, "energy-dissipation", [] { return check_energy(); });
  all &= guarded(3, "manufactured-convergence", [] { return check_mms(); });
  all &= guarded(4, "integration-by-parts", [] { return check_ibp(12345); });
  all &= guarded(5, "quasi-neutral-collapse", [] { return check_qn_collapse(); });
  all &= guarded(6, "electron-mass-rate", [] { return check_zem_rate(); });
  all &= guarded(7, "joint-limit-rate", [] { return check_joint_rate(); });
  all &= guarded(8, "relative-energy-identity",
                 [] { return check_releng_identity(); });
  all &= guarded(9, "leading-order-closure",
                 [] { return check_leading_order(); });
  all &= guarded(10, "deterministic-outputs", [] { return check_determinism(); });
  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
