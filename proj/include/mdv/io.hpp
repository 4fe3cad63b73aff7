#pragma once
#include <filesystem>
#include <json.hpp>
#include <string>
#include <vector>

#include "mdv/characters.hpp"
#include "mdv/fb_data.hpp"
#include "mdv/fusion.hpp"
#include "mdv/modular_data.hpp"

namespace mdv {

using json = nlohmann::json;

// All parsers are strict: unknown keys, wrong types, missing fields, unknown
// labels, and duplicate entries are Errc::ParseError. Value-level structural
// violations (singular S, broken involution, ...) are left to ModularData::make
// and the check layer, so that they surface as failed checks, not I/O errors.

json md_to_json(const ModularData& md);
ModularData md_from_json(const json& j);

json fusion_to_json(const FusionTensor& N, const ModularData& md);
FusionTensor fusion_from_json(const json& j, const ModularData& md);

json fb_to_json(const FBData& fb, const ModularData& md);
FBData fb_from_json(const json& j, const ModularData& md);

json characters_to_json(const std::vector<CharacterSeries>& chs);
std::vector<CharacterSeries> characters_from_json(const json& j);

json load_json_file(const std::filesystem::path& p);  // ParseError with filename
void write_json_file(const std::filesystem::path& p, const json& j);
std::string canonical_dump(const json& j);  // 2-space indent + trailing newline

// Shared helpers for strict parsing.
void require_keys(const json& j, std::initializer_list<const char*> keys,
                  const char* where);
std::complex<double> complex_from_json(const json& j, const char* where);
json complex_to_json(const std::complex<double>& z);

}  // namespace mdv
