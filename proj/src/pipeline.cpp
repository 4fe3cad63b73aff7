#include "mdv/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "mdv/catalog.hpp"
#include "mdv/characters.hpp"
#include "mdv/error.hpp"
#include "mdv/fb_checks.hpp"
#include "mdv/verlinde.hpp"

namespace mdv {

namespace {

constexpr double kResidualCap = 1e300;

double clamp_residual(double r) {
  if (!std::isfinite(r) || r > kResidualCap) return kResidualCap;
  return r;
}

std::string fixture_name(const std::filesystem::path& dir) {
  std::string s = dir.string();
  while (s.size() > 1 && s.back() == '/') s.pop_back();
  return std::filesystem::path(s).filename().string();
}

double tol_for(const RunConfig& cfg, const std::string& name) {
  auto it = cfg.tol.find(name);
  return it != cfg.tol.end() ? it->second : default_tolerance(name);
}

Check shell(const std::string& name, double tol, bool mandatory) {
  Check c;
  c.name = name;
  c.tolerance = tol;
  c.mandatory = mandatory;
  return c;
}

Check failed(const std::string& name, double tol, bool mandatory, const std::string& why) {
  Check c = shell(name, tol, mandatory);
  c.pass = false;
  c.max_residual = kResidualCap;
  c.notes = why;
  return c;
}

// Runs a check body, converting any thrown error into a failed record so the
// report always lists the full battery.
Check guarded(const std::string& name, double tol, bool mandatory,
              const std::function<Check()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    return failed(name, tol, mandatory, e.what());
  } catch (const std::exception& e) {
    return failed(name, tol, mandatory, e.what());
  }
}

std::string fmt_double(const char* prefix, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%.3g", prefix, v);
  return buf;
}

// Negates one nonzero S entry in the raw document; entry selection is the
// seeded generator modulo the nonzero count, row-major. Malformed documents
// are left alone — the parser will reject them anyway.
void apply_break_s(json& jmd, std::uint64_t seed) {
  if (!jmd.is_object() || !jmd.contains("S") || !jmd["S"].is_array()) return;
  json& S = jmd["S"];
  std::vector<std::pair<std::size_t, std::size_t>> nonzero;
  for (std::size_t r = 0; r < S.size(); ++r) {
    if (!S[r].is_array()) return;
    for (std::size_t c = 0; c < S[r].size(); ++c) {
      const json& z = S[r][c];
      if (z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number() &&
          (z[0].get<double>() != 0.0 || z[1].get<double>() != 0.0))
        nonzero.emplace_back(r, c);
    }
  }
  if (nonzero.empty()) return;
  std::mt19937_64 rng(seed);
  auto [r, c] = nonzero[rng() % nonzero.size()];
  S[r][c][0] = -S[r][c][0].get<double>();
  S[r][c][1] = -S[r][c][1].get<double>();
}

std::optional<json> load_optional(const std::filesystem::path& p) {
  if (!std::filesystem::exists(p)) return std::nullopt;
  return load_json_file(p);
}

const char* kUnavailable = "skipped: modular data unavailable";

}  // namespace

double default_tolerance(const std::string& check) {
  if (check == "verlinde_fusion") return 1e-6;  // integrality rounding gap
  if (check == "nondegeneracy" || check == "fb_nondegeneracy") return 1e-6;  // det floor
  if (check == "character_s_transform" || check == "character_t_transform" ||
      check == "character_s_squared")
    return 1e-6;  // truncation-limited
  return 1e-9;
}

VerificationReport run_verify(const std::filesystem::path& dir, const RunConfig& cfg) {
  if (cfg.truncation < 1)
    throw Error(Errc::InvalidParameters, "truncation must be at least 1");
  if (cfg.taus.empty())
    throw Error(Errc::InvalidParameters, "at least one sample point is required");
  if (!cfg.break_target.empty() && cfg.break_target != "S")
    throw Error(Errc::InvalidParameters,
                "unknown break target '" + cfg.break_target + "'");

  VerificationReport rep;
  rep.fixture = fixture_name(dir);

  const auto md_path = dir / "modular_data.json";
  if (!std::filesystem::exists(md_path))
    throw Error(Errc::ParseError, "no modular_data.json in '" + dir.string() + "'");

  json jmd = load_json_file(md_path);
  if (cfg.break_target == "S") apply_break_s(jmd, cfg.seed);
  std::optional<json> jfus = load_optional(dir / "fusion.json");
  std::optional<json> jfb = load_optional(dir / "fb.json");
  std::optional<json> jch = load_optional(dir / "characters.json");

  // --- structural: construction invariants of the modular data plus, when a
  // fusion document is supplied, the ring axioms of its tensor. Document
  // schema violations rethrow as ParseError.
  Check structural = shell("structural", 0.0, true);
  structural.pass = true;
  std::optional<ModularData> md;
  try {
    md = md_from_json(jmd);
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) throw;
    structural.pass = false;
    structural.max_residual = kResidualCap;
    structural.notes = e.what();
  }

  std::optional<FusionTensor> n_file;
  if (jfus && md) {
    n_file = fusion_from_json(*jfus, *md);  // strict: only ParseError escapes
    try {
      validate_fusion_ring(*n_file, md->vacuum, md->dual);
    } catch (const Error& e) {
      structural.pass = false;
      structural.max_residual = kResidualCap;
      structural.notes = e.what();
    }
  }
  std::optional<FBData> fb;
  if (jfb && md) fb = fb_from_json(*jfb, *md);
  std::optional<std::vector<CharacterSeries>> chs;
  if (jch) {
    chs = characters_from_json(*jch);
    for (auto& ch : *chs)
      if (ch.coeffs.size() > static_cast<std::size_t>(cfg.truncation) + 1)
        ch.coeffs.resize(static_cast<std::size_t>(cfg.truncation) + 1);
  }
  rep.checks.push_back(structural);

  // --- verlinde_fusion: S must round to a nonnegative integer tensor.
  const double verl_tol = tol_for(cfg, "verlinde_fusion");
  std::optional<FusionTensor> n_verl;
  {
    Check c = shell("verlinde_fusion", verl_tol, true);
    if (md) {
      try {
        VerlindeResult vr = verlinde_fusion(*md, verl_tol);
        n_verl = std::move(vr.N);
        c.max_residual = vr.max_integrality_residual;
        c.pass = c.max_residual < c.tolerance;
        c.witness = {"a1=" + md->labels[vr.worst_triple[0]],
                     "a2=" + md->labels[vr.worst_triple[1]],
                     "a3=" + md->labels[vr.worst_triple[2]]};
      } catch (const Error& e) {
        c = failed(c.name, c.tolerance, true, e.what());
      }
    } else {
      c = failed(c.name, c.tolerance, true, kUnavailable);
    }
    rep.checks.push_back(c);
  }

  // --- fusion_oracle_match: supplied tensor vs the Verlinde rounding.
  if (jfus) {
    Check c = shell("fusion_oracle_match", tol_for(cfg, "fusion_oracle_match"), true);
    if (md && n_file && n_verl) {
      c.pass = true;
      double worst = 0.0;
      for (std::size_t a1 = 0; a1 < n_file->n; ++a1)
        for (std::size_t a2 = 0; a2 < n_file->n; ++a2)
          for (std::size_t a3 = 0; a3 < n_file->n; ++a3) {
            double d = std::abs(static_cast<double>(n_file->at(a1, a2, a3)) -
                                static_cast<double>(n_verl->at(a1, a2, a3)));
            if (d > worst) {
              worst = d;
              c.witness = {"a1=" + md->labels[a1], "a2=" + md->labels[a2],
                           "a3=" + md->labels[a3]};
            }
          }
      c.max_residual = worst;
      c.pass = worst < c.tolerance;
      c.notes = "entrywise gap between the supplied tensor and the Verlinde rounding";
    } else {
      c = failed(c.name, c.tolerance, true,
                 n_verl ? kUnavailable : "skipped: no Verlinde tensor");
    }
    rep.checks.push_back(c);
  }

  // Checks below run against the supplied tensor when present (it was just
  // matched against the rounding), else the rounded one.
  const FusionTensor* N = n_file ? &*n_file : (n_verl ? &*n_verl : nullptr);

  // --- diagonalization_check: S^{-1} Ntilde(a2) S diagonal for every a2.
  {
    const double tol = tol_for(cfg, "diagonalization_check");
    Check c = shell("diagonalization_check", tol, true);
    if (md && N) {
      c = guarded(c.name, tol, true, [&] {
        Check k = shell("diagonalization_check", tol, true);
        DiagonalizationResult dr = diagonalization_residuals(*md, *N);
        k.max_residual = dr.max_offdiag;
        k.witness = dr.witness;
        k.pass = k.max_residual < k.tolerance;
        k.notes = fmt_double("eigenvalue vs S-column ratio deviation ", dr.max_eigen_dev) +
                  std::string(" (informational)");
        return k;
      });
    } else {
      c = failed(c.name, tol, true, N ? kUnavailable : "skipped: no fusion tensor");
    }
    rep.checks.push_back(c);
  }

  // --- quantum_dimensions (informational): d_a real; flags d_a >= 1.
  {
    const double tol = tol_for(cfg, "quantum_dimensions");
    Check c = shell("quantum_dimensions", tol, false);
    if (md) {
      c = guarded(c.name, tol, false, [&] {
        Check k = shell("quantum_dimensions", tol, false);
        std::vector<cplx> d = quantum_dimensions(*md);
        double worst = 0.0;
        double min_re = d.empty() ? 0.0 : d[0].real();
        bool ge1 = true;
        for (std::size_t a = 0; a < d.size(); ++a) {
          if (std::abs(d[a].imag()) > worst) {
            worst = std::abs(d[a].imag());
            k.witness = {"a=" + md->labels[a]};
          }
          min_re = std::min(min_re, d[a].real());
          ge1 = ge1 && d[a].real() >= 1.0 - tol;
        }
        k.max_residual = worst;
        k.pass = worst < tol;
        k.notes = fmt_double("largest imaginary part; min Re d = ", min_re) +
                  std::string("; all dimensions at least 1: ") + (ge1 ? "yes" : "no");
        return k;
      });
    } else {
      c = failed(c.name, tol, false, kUnavailable);
    }
    rep.checks.push_back(c);
  }

  // --- s_symmetry: S == S^T.
  {
    const double tol = tol_for(cfg, "s_symmetry");
    Check c = shell("s_symmetry", tol, true);
    if (md) {
      c.pass = true;
      double worst = 0.0;
      for (Eigen::Index r = 0; r < md->S.rows(); ++r)
        for (Eigen::Index col = 0; col < md->S.cols(); ++col) {
          double dv = std::abs(md->S(r, col) - md->S(col, r));
          if (dv > worst) {
            worst = dv;
            c.witness = {"a1=" + md->labels[static_cast<std::size_t>(r)],
                         "a2=" + md->labels[static_cast<std::size_t>(col)]};
          }
        }
      c.max_residual = worst;
      c.pass = worst < tol;
    } else {
      c = failed(c.name, tol, true, kUnavailable);
    }
    rep.checks.push_back(c);
  }

  // --- s_unitarity (informational): S S^dagger == I.
  {
    const double tol = tol_for(cfg, "s_unitarity");
    Check c = shell("s_unitarity", tol, false);
    if (md) {
      Mat g = md->S * md->S.adjoint() - Mat::Identity(md->S.rows(), md->S.cols());
      c.max_residual = g.cwiseAbs().maxCoeff();
      c.pass = c.max_residual < tol;
    } else {
      c = failed(c.name, tol, false, kUnavailable);
    }
    rep.checks.push_back(c);
  }

  // --- s2_charge_conjugation (informational): S^2 proportional to the dual
  // permutation, best scalar fitted.
  {
    const double tol = tol_for(cfg, "s2_charge_conjugation");
    Check c = shell("s2_charge_conjugation", tol, false);
    if (md) {
      c = guarded(c.name, tol, false, [&] {
        Check k = shell("s2_charge_conjugation", tol, false);
        ChargeConjugationFit fit = s_squared_vs_conjugation(*md);
        k.max_residual = fit.residual;
        k.pass = fit.residual < tol;
        char buf[96];
        std::snprintf(buf, sizeof buf, "best lambda = %.6g%+.6gi", fit.lambda.real(),
                      fit.lambda.imag());
        k.notes = buf;
        return k;
      });
    } else {
      c = failed(c.name, tol, false, kUnavailable);
    }
    rep.checks.push_back(c);
  }

  // --- nondegeneracy: fallback determinant of S/S(e,e), only when no
  // exchange document is present (otherwise fb_nondegeneracy owns this).
  if (!jfb) {
    const double tol = tol_for(cfg, "nondegeneracy");
    Check c = shell("nondegeneracy", tol, true);
    if (md) {
      const long e = static_cast<long>(md->vacuum);
      cplx see = md->S(e, e);
      if (std::abs(see) < 1e-300) {
        c = failed(c.name, tol, true, errc_name(Errc::VacuumEntryZero));
      } else {
        Mat T = md->S / see;
        c.max_residual = std::abs(T.determinant());
        c.pass = c.max_residual > tol;
        c.notes =
            "value is |det(S/S(e,e))| on the fallback path without an exchange "
            "document; pass requires it above tolerance";
      }
    } else {
      c = failed(c.name, tol, true, kUnavailable);
    }
    rep.checks.push_back(c);
  }

  // --- exchange-layer battery.
  if (jfb) {
    struct Step {
      const char* name;
      bool mandatory;
      std::function<Check(const FBContext&, double)> run;
    };
    const Step steps[] = {
        {"fb_structural", true, check_fb_structural},
        {"fb_pentagon", true, check_fb_pentagon},
        {"fb_hexagon", true, check_fb_hexagon},
        {"fb_b2_composite", true, check_fb_b2_composite},
        {"fb_rigidity", true, check_fb_rigidity},
        {"fb_ms_identity", true, check_fb_ms_identity},
        {"fb_s_form3", true, check_fb_s_form3},
        {"fb_nondegeneracy", true, check_fb_nondegeneracy},
        {"diagonalization_fb_eigen", false, check_fb_diag_eigen},
    };
    for (const Step& s : steps) {
      const double tol = tol_for(cfg, s.name);
      if (md && N && fb) {
        FBContext ctx{*md, *N, *fb};
        rep.checks.push_back(
            guarded(s.name, tol, s.mandatory, [&] { return s.run(ctx, tol); }));
      } else {
        rep.checks.push_back(
            failed(s.name, tol, s.mandatory, N ? kUnavailable : "skipped: no fusion tensor"));
      }
    }
  }

  // --- characters: exact offset gate, then the transform checks.
  if (jch) {
    Check off = shell("character_offset", 0.0, true);
    if (md && chs) {
      off = guarded("character_offset", 0.0, true,
                    [&] { return check_character_offset(*md, *chs); });
    } else {
      off = failed("character_offset", 0.0, true, kUnavailable);
    }
    rep.checks.push_back(off);

    struct TStep {
      const char* name;
      bool mandatory;
      std::function<Check(const ModularData&, const std::vector<CharacterSeries>&,
                          const std::vector<cplx>&, double)>
          run;
    };
    const TStep tsteps[] = {
        {"character_s_transform", true, check_character_s_transform},
        {"character_t_transform", false, check_character_t_transform},
        {"character_s_squared", false, check_character_s_squared},
    };
    for (const TStep& s : tsteps) {
      const double tol = tol_for(cfg, s.name);
      if (!off.pass) {
        rep.checks.push_back(
            failed(s.name, tol, s.mandatory, "skipped: character_offset failed"));
      } else {
        rep.checks.push_back(guarded(s.name, tol, s.mandatory,
                                     [&] { return s.run(*md, *chs, cfg.taus, tol); }));
      }
    }
  }

  return rep;
}

RunStatus report_status(const VerificationReport& rep) {
  return rep.all_mandatory_pass() ? RunStatus::Success : RunStatus::CheckFailure;
}

json report_to_json(const VerificationReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json jc;
    jc["mandatory"] = c.mandatory;
    jc["max_residual"] = clamp_residual(c.max_residual);
    jc["name"] = c.name;
    jc["notes"] = c.notes;
    jc["pass"] = c.pass;
    jc["tolerance"] = c.tolerance;
    jc["witness"] = c.witness;
    checks.push_back(std::move(jc));
  }
  json j;
  j["checks"] = std::move(checks);
  j["fixture"] = rep.fixture;
  j["schema_version"] = 1;
  j["status"] = rep.all_mandatory_pass() ? "success" : "check_failure";
  return j;
}

std::string report_human(const VerificationReport& rep) {
  std::ostringstream os;
  os << "fixture: " << rep.fixture << "\n";
  int mand = 0, mand_pass = 0, info = 0;
  for (const auto& c : rep.checks) {
    char line[192];
    std::snprintf(line, sizeof line, "  %s  %-26s residual=%-12.3g tol=%g",
                  c.pass ? "PASS" : "FAIL", c.name.c_str(),
                  clamp_residual(c.max_residual), c.tolerance);
    os << line;
    if (!c.mandatory) os << "  (informational)";
    os << "\n";
    if (!c.witness.empty()) {
      os << "        witness:";
      for (const auto& w : c.witness) os << ' ' << w;
      os << "\n";
    }
    if (!c.notes.empty()) os << "        " << c.notes << "\n";
    if (c.mandatory) {
      ++mand;
      if (c.pass) ++mand_pass;
    } else {
      ++info;
    }
  }
  os << "status: " << (rep.all_mandatory_pass() ? "success" : "check failure") << " ("
     << mand_pass << "/" << mand << " mandatory checks passed, " << info
     << " informational)\n";
  return os.str();
}

std::string report_schema_text() {
  static const char* kSchema = R"({
    "$schema": "http://json-schema.org/draft-07/schema#",
    "additionalProperties": false,
    "properties": {
      "checks": {
        "items": {
          "additionalProperties": false,
          "properties": {
            "mandatory": {"type": "boolean"},
            "max_residual": {"type": "number"},
            "name": {"type": "string"},
            "notes": {"type": "string"},
            "pass": {"type": "boolean"},
            "tolerance": {"type": "number"},
            "witness": {"items": {"type": "string"}, "type": "array"}
          },
          "required": ["name", "mandatory", "pass", "max_residual", "tolerance",
                       "witness", "notes"],
          "type": "object"
        },
        "type": "array"
      },
      "fixture": {"type": "string"},
      "schema_version": {"const": 1},
      "status": {"enum": ["success", "check_failure"]}
    },
    "required": ["schema_version", "fixture", "status", "checks"],
    "title": "verification report",
    "type": "object"
  })";
  return canonical_dump(json::parse(kSchema));
}

}  // namespace mdv
