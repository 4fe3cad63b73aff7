#pragma once
#include <string>
#include <vector>

namespace mdv {

// One verification check: pass iff max_residual is within tolerance (checks
// with a different shape, e.g. exact equality, encode that in max_residual).
struct Check {
  std::string name;
  bool mandatory = true;
  bool pass = false;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::vector<std::string> witness;  // "slot=label" strings for the worst offender
  std::string notes;
};

struct VerificationReport {
  std::string fixture;
  std::vector<Check> checks;

  bool all_mandatory_pass() const {
    for (const auto& c : checks)
      if (c.mandatory && !c.pass) return false;
    return true;
  }
};

}  // namespace mdv
