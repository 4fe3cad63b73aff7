#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "mdv/catalog.hpp"
#include "mdv/error.hpp"
#include "mdv/io.hpp"
#include "mdv/pipeline.hpp"
#include "mdv/verlinde.hpp"

namespace {

using mdv::json;

// "name=value" with a positive value.
std::pair<std::string, double> parse_tol(const std::string& item) {
  auto eq = item.find('=');
  if (eq == std::string::npos || eq == 0)
    throw mdv::Error(mdv::Errc::InvalidParameters,
                     "--tol expects name=value, got '" + item + "'");
  double v = 0.0;
  try {
    std::size_t used = 0;
    v = std::stod(item.substr(eq + 1), &used);
    if (used != item.size() - eq - 1) throw std::invalid_argument(item);
  } catch (const std::exception&) {
    throw mdv::Error(mdv::Errc::InvalidParameters, "--tol: bad value in '" + item + "'");
  }
  if (!(v > 0.0))
    throw mdv::Error(mdv::Errc::InvalidParameters, "--tol: tolerances must be positive");
  return {item.substr(0, eq), v};
}

// "re,im" with im > 0.
mdv::cplx parse_tau(const std::string& item) {
  auto comma = item.find(',');
  if (comma == std::string::npos)
    throw mdv::Error(mdv::Errc::InvalidParameters,
                     "--tau expects re,im, got '" + item + "'");
  double re = 0.0, im = 0.0;
  try {
    std::size_t u1 = 0, u2 = 0;
    re = std::stod(item.substr(0, comma), &u1);
    im = std::stod(item.substr(comma + 1), &u2);
    if (u1 != comma || u2 != item.size() - comma - 1) throw std::invalid_argument(item);
  } catch (const std::exception&) {
    throw mdv::Error(mdv::Errc::InvalidParameters, "--tau: bad value in '" + item + "'");
  }
  if (!(im > 0.0))
    throw mdv::Error(mdv::Errc::InvalidParameters,
                     "--tau: sample points live in the upper half-plane");
  return {re, im};
}

int do_verify(const std::string& dir, const std::vector<std::string>& tols,
              const std::vector<std::string>& taus, int truncation,
              std::uint64_t seed, const std::string& break_target,
              const std::string& format) {
  mdv::VerificationReport rep;
  try {
    mdv::RunConfig cfg;
    for (const auto& t : tols) cfg.tol.insert(parse_tol(t));
    if (!taus.empty()) {
      cfg.taus.clear();
      for (const auto& t : taus) cfg.taus.push_back(parse_tau(t));
    }
    cfg.truncation = truncation;
    cfg.seed = seed;
    cfg.break_target = break_target;
    rep = mdv::run_verify(dir, cfg);
  } catch (const mdv::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  if (format == "json")
    std::cout << mdv::canonical_dump(mdv::report_to_json(rep));
  else
    std::cout << mdv::report_human(rep);
  return static_cast<int>(mdv::report_status(rep));
}

int do_fusion(const std::string& md_path) {
  try {
    mdv::ModularData md = mdv::md_from_json(mdv::load_json_file(md_path));
    mdv::VerlindeResult vr = mdv::verlinde_fusion(md);
    std::cout << mdv::canonical_dump(mdv::fusion_to_json(vr.N, md));
    return 0;
  } catch (const mdv::Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == mdv::Errc::ParseError ? 2 : 1;
  }
}

int do_emit(const std::string& name, const std::vector<long long>& params,
            const std::string& out) {
  try {
    mdv::CatalogEntry e;
    if (params.empty()) {
      e = mdv::make_by_name(name);
    } else if (name == "su2_level_k" && params.size() == 1) {
      e = mdv::make_su2(params[0]);
    } else if (name == "minimal_model" && params.size() == 2) {
      e = mdv::make_minimal(params[0], params[1]);
    } else if (name == "pointed_cyclic" && params.size() == 2) {
      e = mdv::make_pointed(params[0], params[1]);
    } else {
      throw mdv::Error(mdv::Errc::InvalidParameters,
                       "family '" + name + "' does not take " +
                           std::to_string(params.size()) + " parameter(s)");
    }

    std::filesystem::create_directories(out);
    const std::filesystem::path dir(out);
    mdv::write_json_file(dir / "modular_data.json", mdv::md_to_json(e.md));
    mdv::write_json_file(dir / "fusion.json", mdv::fusion_to_json(e.N, e.md));
    if (e.fb) mdv::write_json_file(dir / "fb.json", mdv::fb_to_json(*e.fb, e.md));
    if (e.characters)
      mdv::write_json_file(dir / "characters.json",
                           mdv::characters_to_json(*e.characters));
    json meta;
    meta["family"] = e.family;
    json jparams = json::object();
    for (const auto& [k, v] : e.params) jparams[k] = v;
    meta["params"] = std::move(jparams);
    meta["paper_conditions"] = true;
    meta["notes"] = e.notes;
    mdv::write_json_file(dir / "fixture.json", meta);
    return 0;
  } catch (const mdv::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verifier for finite modular data and its exchange-layer identities"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run the check battery on a fixture directory");
  std::string dir;
  std::vector<std::string> tols, taus;
  int truncation = 300;
  std::uint64_t seed = 0;
  std::string break_target, format = "human";
  verify->add_option("dir", dir, "directory holding modular_data.json and friends")
      ->required();
  verify->add_option("--tol", tols, "tolerance override, check-name=value (repeatable)");
  verify->add_option("--tau", taus, "character sample point re,im (repeatable)");
  verify->add_option("-L,--truncation", truncation, "character series length")
      ->check(CLI::Range(1, 1 << 20));
  verify->add_option("--seed", seed, "seed for deterministic entry selection");
  verify->add_option("--break", break_target, "mutate a document before checking")
      ->check(CLI::IsMember({"S"}));
  verify->add_option("--format", format, "report rendering")
      ->check(CLI::IsMember({"human", "json"}));

  auto* fusion = app.add_subcommand(
      "fusion", "round the Verlinde sums of a modular-data document and print the tensor");
  std::string md_path;
  fusion->add_option("md", md_path, "path to modular_data.json")->required();

  auto* catalog = app.add_subcommand("catalog", "built-in generators");
  auto* emit = catalog->add_subcommand("emit", "write a generated fixture directory");
  std::string entry_name, out_dir;
  std::vector<long long> entry_params;
  std::string name_help = "catalog name (";
  {
    bool first = true;
    for (const auto& n : mdv::catalog_names()) {
      if (!first) name_help += ", ";
      name_help += n;
      first = false;
    }
    name_help += ") or family su2_level_k/minimal_model/pointed_cyclic";
  }
  emit->add_option("name", entry_name, name_help)->required();
  emit->add_option("params", entry_params, "family parameters (integers)");
  emit->add_option("--out", out_dir, "output directory")->required();

  auto* schema = app.add_subcommand("report-schema", "print the JSON report schema");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (verify->parsed())
    return do_verify(dir, tols, taus, truncation, seed, break_target, format);
  if (fusion->parsed()) return do_fusion(md_path);
  if (catalog->parsed() && emit->parsed()) return do_emit(entry_name, entry_params, out_dir);
  if (schema->parsed()) {
    std::cout << mdv::report_schema_text();
    return 0;
  }
  std::cerr << "missing subcommand\n";
  return 2;
}
