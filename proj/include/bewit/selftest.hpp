#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bewit {

/// Resolved settings shared by every CLI run.
struct RunConfig {
  double eig_tol = 1e-10;     // eigenvalue-level checks (PPT, spectra, oracle equivalence)
  double sym_tol = 1e-12;     // entrywise matrix identities
  double dead_zone = 1e-14;   // determinant sign tests near region boundaries
  std::uint64_t seed = 1;
  int workers = 1;
  std::string format = "json";  // json | csv

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
  std::string describe() const;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // space-separated key=value pairs
};

struct SelftestReport {
  std::vector<CheckResult> checks;
  int failures() const;
  /// One "PASS|FAIL name detail" line per check plus a summary line.
  std::string text() const;
};

/// Runs the invariant suite at reduced sample sizes. The report depends only
/// on the configuration's seed and tolerances, never on `workers`.
SelftestReport run_selftest(const RunConfig& cfg);

}  // namespace bewit
