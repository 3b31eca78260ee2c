#pragma once

#include <string>
#include <vector>

#include "magnusforest/matrix_path.hpp"

namespace magnusforest {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;  // first counterexample on failure
};

struct Report {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  void add(const std::string& name, bool pass, const std::string& detail = "");
  void absorb(const std::string& prefix, const Report& other);
};

// Suites driven by the CLI `verify` command. `degree` caps the exhaustive
// ranges; each check also clamps itself to the range it is specified for.
Report verify_axioms(int degree);
Report verify_theorem(int degree);
Report verify_psi(int degree);
Report verify_flows(int degree);
Report verify_numeric(int degree, const MatPolyPath& path, int threads);
Report verify_all(int degree, const MatPolyPath& path, int threads);

/// Dispatch by suite name (axioms | theorem | psi | flows | numeric | all).
/// Throws std::invalid_argument for unknown names.
Report run_verify_suite(const std::string& suite, int degree, const MatPolyPath& path,
                        int threads);

std::string render_report(const Report& report);

}  // namespace magnusforest
