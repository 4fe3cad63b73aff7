#pragma once
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "mdv/io.hpp"
#include "mdv/linalg.hpp"
#include "mdv/report.hpp"

namespace mdv {

// Everything a verify run needs besides the fixture directory. Defaults
// reproduce the documented report exactly; tolerance overrides are keyed by
// check name.
struct RunConfig {
  std::map<std::string, double> tol;
  std::vector<cplx> taus{cplx(0.0, 2.0), cplx(0.0, 1.5), cplx(1.0 / 3.0, 1.0)};
  int truncation = 300;      // character coefficients used: q^0 .. q^truncation
  std::uint64_t seed = 0;    // selects the mutated entry for break_target
  std::string break_target;  // "" or "S": negate one nonzero S entry after load
};

enum class RunStatus { Success = 0, CheckFailure = 1, ParseError = 2 };

// 1e-9 on residuals generally; 1e-6 where the quantity is a rounding gap or a
// truncation-limited sum (verlinde integrality, characters) or a determinant
// floor (nondegeneracy).
double default_tolerance(const std::string& check);

// Loads modular_data.json (+ optional fusion.json / fb.json / characters.json)
// from dir and runs the battery in the fixed documented order. Document-level
// problems (missing/garbled files, schema violations) throw Errc::ParseError;
// value-level problems (singular S, broken ring axioms, failed identities)
// become failed checks in the returned report.
VerificationReport run_verify(const std::filesystem::path& dir,
                              const RunConfig& cfg = RunConfig{});

RunStatus report_status(const VerificationReport& rep);

// Renderings. Both deterministic; the JSON form is byte-identical across
// reruns with the same inputs, with non-finite residuals clamped to 1e300.
json report_to_json(const VerificationReport& rep);
std::string report_human(const VerificationReport& rep);

// The versioned schema the JSON report validates against (also shipped at
// docs/report_schema.json).
std::string report_schema_text();

}  // namespace mdv
