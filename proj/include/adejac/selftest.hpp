#pragma once

#include <string>
#include <vector>

namespace adejac::selftest {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

CheckResult lattice_suite();
CheckResult polarisation_examples();
CheckResult classification_sweep();
CheckResult failure_modes();
CheckResult partition_suite();
CheckResult proof_scan_suite();
CheckResult moduli_suite();
CheckResult characteristic_cycle_suite();
CheckResult genus_cross_checks();
CheckResult determinism_check();

// The full invariant suite, in the order above.
std::vector<CheckResult> run_all();

} // namespace adejac::selftest
