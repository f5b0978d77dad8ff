#pragma once

#include <string>
#include <vector>

#include "eplab/config.hpp"

namespace eplab {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // human-readable measurements, one per line
};

// Checks reachable through `verify --check <name>`.
CheckResult check_mms();                 // L1 convergence of euler and bep
CheckResult check_ibp(long seed);        // discrete integration-by-parts
CheckResult check_energy();              // dissipation of the three energies
CheckResult check_releng_identity();     // relative-energy rate inequality
CheckResult check_leading_order();       // closure consistency of (n0, mu0)

// Additional acceptance-level checks.
CheckResult check_conservation();        // per-step mass drift, 1e4 steps
CheckResult check_qn_collapse();         // ae at delta = 0 tracks euler
CheckResult check_zem_rate();            // electron-mass limit rate sweep
CheckResult check_joint_rate();          // joint limit rate sweep
CheckResult check_determinism();         // byte-identical outputs

// Dispatch for the CLI: which is one of mms, ibp, energy,
// releng-identity, leading-order, or all.
std::vector<CheckResult> run_verify(const RunConfig& cfg,
                                    const std::string& which);

}  // namespace eplab
