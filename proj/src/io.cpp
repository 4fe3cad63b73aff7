#include "mdv/io.hpp"

#include <fstream>
#include <limits>
#include <set>

#include "mdv/error.hpp"

namespace mdv {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(Errc::ParseError, msg); }

const json& field(const json& j, const char* key, const char* where) {
  if (!j.is_object()) bad(std::string(where) + ": expected object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string(where) + ": missing field '" + key + "'");
  return *it;
}

std::string string_field(const json& j, const char* key, const char* where) {
  const json& v = field(j, key, where);
  if (!v.is_string()) bad(std::string(where) + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

Rational rational_field(const json& j, const char* key, const char* where) {
  return Rational::parse(string_field(j, key, where));
}

std::size_t label_index(const ModularData& md, const std::string& label,
                        const char* where) {
  for (std::size_t i = 0; i < md.size(); ++i)
    if (md.labels[i] == label) return i;
  bad(std::string(where) + ": unknown label '" + label + "'");
}

std::string label_of(const ModularData& md, std::size_t i, const char* where) {
  if (i >= md.size()) throw Error(Errc::DimensionMismatch, std::string(where) + ": label index out of range");
  return md.labels[i];
}

template <std::size_t n>
json key_to_json(const std::array<std::size_t, n>& k, const ModularData& md,
                 const char* where) {
  json a = json::array();
  for (std::size_t i : k) a.push_back(label_of(md, i, where));
  return a;
}

template <std::size_t n>
std::array<std::size_t, n> key_from_json(const json& e, const ModularData& md,
                                         const char* where) {
  const json& jk = field(e, "key", where);
  if (!jk.is_array() || jk.size() != n)
    bad(std::string(where) + ": 'key' must be an array of " + std::to_string(n) + " labels");
  std::array<std::size_t, n> k{};
  for (std::size_t i = 0; i < n; ++i) {
    if (!jk[i].is_string()) bad(std::string(where) + ": key slots must be label strings");
    k[i] = label_index(md, jk[i].get<std::string>(), where);
  }
  return k;
}

}  // namespace

void require_keys(const json& j, std::initializer_list<const char*> keys,
                  const char* where) {
  if (!j.is_object()) bad(std::string(where) + ": expected object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      bad(std::string(where) + ": unknown field '" + it.key() + "'");
}

std::complex<double> complex_from_json(const json& j, const char* where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    bad(std::string(where) + ": complex values are [re, im] number pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to_json(const std::complex<double>& z) {
  return json::array({z.real(), z.imag()});
}

json md_to_json(const ModularData& md) {
  json j;
  j["labels"] = md.labels;
  j["vacuum"] = md.labels[md.vacuum];
  json dual = json::object(), h = json::object();
  for (std::size_t a = 0; a < md.size(); ++a) {
    dual[md.labels[a]] = md.labels[md.dual[a]];
    h[md.labels[a]] = md.h[a].str();
  }
  j["dual"] = std::move(dual);
  j["h"] = std::move(h);
  j["c"] = md.c.str();
  json S = json::array();
  for (Eigen::Index r = 0; r < md.S.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index col = 0; col < md.S.cols(); ++col)
      row.push_back(complex_to_json(md.S(r, col)));
    S.push_back(std::move(row));
  }
  j["S"] = std::move(S);
  return j;
}

ModularData md_from_json(const json& j) {
  const char* where = "modular_data";
  require_keys(j, {"labels", "vacuum", "dual", "h", "c", "S"}, where);

  const json& jl = field(j, "labels", where);
  if (!jl.is_array() || jl.empty()) bad("modular_data: 'labels' must be a nonempty array");
  std::vector<std::string> labels;
  for (const auto& l : jl) {
    if (!l.is_string()) bad("modular_data: labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  std::set<std::string> label_set(labels.begin(), labels.end());
  if (label_set.size() != labels.size()) bad("modular_data: duplicate label");
  auto index_of = [&](const std::string& l, const char* what) -> std::size_t {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) return i;
    bad(std::string("modular_data: ") + what + " refers to unknown label '" + l + "'");
  };

  std::size_t vacuum = index_of(string_field(j, "vacuum", where), "vacuum");

  const json& jd = field(j, "dual", where);
  if (!jd.is_object()) bad("modular_data: 'dual' must be an object");
  std::vector<std::size_t> dual(labels.size());
  std::size_t seen = 0;
  for (auto it = jd.begin(); it != jd.end(); ++it) {
    if (!it.value().is_string()) bad("modular_data: dual values must be label strings");
    dual[index_of(it.key(), "dual key")] = index_of(it.value().get<std::string>(), "dual value");
    ++seen;
  }
  if (seen != labels.size()) bad("modular_data: 'dual' must cover every label exactly once");

  const json& jh = field(j, "h", where);
  if (!jh.is_object()) bad("modular_data: 'h' must be an object");
  std::vector<Rational> h(labels.size());
  seen = 0;
  for (auto it = jh.begin(); it != jh.end(); ++it) {
    if (!it.value().is_string()) bad("modular_data: h values must be rational strings");
    h[index_of(it.key(), "h key")] = Rational::parse(it.value().get<std::string>());
    ++seen;
  }
  if (seen != labels.size()) bad("modular_data: 'h' must cover every label exactly once");

  Rational c = rational_field(j, "c", where);

  const json& js = field(j, "S", where);
  if (!js.is_array() || js.size() != labels.size())
    bad("modular_data: 'S' must be an n x n matrix of [re, im] pairs");
  Mat S(labels.size(), labels.size());
  for (std::size_t r = 0; r < labels.size(); ++r) {
    if (!js[r].is_array() || js[r].size() != labels.size())
      bad("modular_data: 'S' must be an n x n matrix of [re, im] pairs");
    for (std::size_t col = 0; col < labels.size(); ++col)
      S(r, col) = complex_from_json(js[r][col], "modular_data S entry");
  }

  return ModularData::make(std::move(labels), vacuum, std::move(dual), std::move(h), c,
                           std::move(S));
}

json fusion_to_json(const FusionTensor& N, const ModularData& md) {
  if (N.n != md.size())
    throw Error(Errc::DimensionMismatch, "fusion tensor does not match the label set");
  json entries = json::array();
  for (std::size_t a1 = 0; a1 < N.n; ++a1)
    for (std::size_t a2 = 0; a2 < N.n; ++a2)
      for (std::size_t a3 = 0; a3 < N.n; ++a3)
        if (unsigned m = N.at(a1, a2, a3)) {
          json e;
          e["a1"] = md.labels[a1];
          e["a2"] = md.labels[a2];
          e["a3"] = md.labels[a3];
          e["n"] = m;
          entries.push_back(std::move(e));
        }
  json j;
  j["N"] = std::move(entries);
  return j;
}

FusionTensor fusion_from_json(const json& j, const ModularData& md) {
  const char* where = "fusion";
  require_keys(j, {"N"}, where);
  const json& jn = field(j, "N", where);
  if (!jn.is_array()) bad("fusion: 'N' must be an array of entries");
  FusionTensor N(md.size());
  for (const json& e : jn) {
    const char* ew = "fusion entry";
    require_keys(e, {"a1", "a2", "a3", "n"}, ew);
    std::size_t a1 = label_index(md, string_field(e, "a1", ew), ew);
    std::size_t a2 = label_index(md, string_field(e, "a2", ew), ew);
    std::size_t a3 = label_index(md, string_field(e, "a3", ew), ew);
    const json& jv = field(e, "n", ew);
    if (!jv.is_number_integer())
      bad("fusion entry: 'n' must be a positive integer");
    long long m = jv.get<long long>();
    if (m <= 0) bad("fusion entry: only nonzero multiplicities are stored, and they are positive");
    if (m > std::numeric_limits<unsigned>::max()) bad("fusion entry: multiplicity out of range");
    if (N.at(a1, a2, a3) != 0) bad("fusion entry: duplicate (a1, a2, a3) triple");
    N.at(a1, a2, a3) = static_cast<unsigned>(m);
  }
  return N;
}

json fb_to_json(const FBData& fb, const ModularData& md) {
  const char* where = "fb";
  json F = json::array();
  for (const auto& [k, v] : fb.F) {
    json e;
    e["key"] = key_to_json(k, md, where);
    e["v"] = complex_to_json(v);
    F.push_back(std::move(e));
  }
  json B = json::array();
  for (const auto& [rk, v] : fb.B) {
    json e;
    e["key"] = key_to_json(rk.second, md, where);
    e["r"] = rk.first;
    e["v"] = complex_to_json(v);
    B.push_back(std::move(e));
  }
  json B2 = json::array();
  for (const auto& [k, v] : fb.B2) {
    json e;
    e["key"] = key_to_json(k, md, where);
    e["v"] = complex_to_json(v);
    B2.push_back(std::move(e));
  }
  auto sigma = [&](const std::map<Key3, cplx>& m) {
    json arr = json::array();
    for (const auto& [k, v] : m) {
      json e;
      e["key"] = key_to_json(k, md, where);
      e["v"] = complex_to_json(v);
      arr.push_back(std::move(e));
    }
    return arr;
  };
  json j;
  j["B"] = std::move(B);
  j["B2"] = std::move(B2);
  j["F"] = std::move(F);
  j["sigma12"] = sigma(fb.sigma12);
  j["sigma23"] = sigma(fb.sigma23);
  return j;
}

FBData fb_from_json(const json& j, const ModularData& md) {
  require_keys(j, {"F", "B", "B2", "sigma12", "sigma23"}, "fb");
  FBData fb;

  auto section = [&](const char* name) -> const json& {
    const json& s = field(j, name, "fb");
    if (!s.is_array()) bad(std::string("fb: '") + name + "' must be an array");
    return s;
  };

  for (const json& e : section("F")) {
    const char* ew = "fb F entry";
    require_keys(e, {"key", "v"}, ew);
    Key6 k = key_from_json<6>(e, md, ew);
    if (!fb.F.emplace(k, complex_from_json(field(e, "v", ew), ew)).second)
      bad("fb F entry: duplicate key");
  }
  for (const json& e : section("B")) {
    const char* ew = "fb B entry";
    require_keys(e, {"key", "r", "v"}, ew);
    Key6 k = key_from_json<6>(e, md, ew);
    const json& jr = field(e, "r", ew);
    if (!jr.is_number_integer()) bad("fb B entry: 'r' must be 0 or -1");
    int r = jr.get<int>();
    if (r != 0 && r != -1) bad("fb B entry: 'r' must be 0 or -1");
    if (!fb.B.emplace(std::make_pair(r, k), complex_from_json(field(e, "v", ew), ew)).second)
      bad("fb B entry: duplicate (r, key)");
  }
  for (const json& e : section("B2")) {
    const char* ew = "fb B2 entry";
    require_keys(e, {"key", "v"}, ew);
    Key6 k = key_from_json<6>(e, md, ew);
    if (!fb.B2.emplace(k, complex_from_json(field(e, "v", ew), ew)).second)
      bad("fb B2 entry: duplicate key");
  }
  auto sigma = [&](const char* name, std::map<Key3, cplx>& out) {
    std::string ew = std::string("fb ") + name + " entry";
    for (const json& e : section(name)) {
      require_keys(e, {"key", "v"}, ew.c_str());
      Key3 k = key_from_json<3>(e, md, ew.c_str());
      if (!out.emplace(k, complex_from_json(field(e, "v", ew.c_str()), ew.c_str())).second)
        bad(ew + ": duplicate key");
    }
  };
  sigma("sigma12", fb.sigma12);
  sigma("sigma23", fb.sigma23);
  return fb;
}

json characters_to_json(const std::vector<CharacterSeries>& chs) {
  json arr = json::array();
  for (const auto& ch : chs) {
    json e;
    e["coeffs"] = ch.coeffs;
    e["label"] = ch.label;
    e["offset"] = ch.offset.str();
    arr.push_back(std::move(e));
  }
  json j;
  j["characters"] = std::move(arr);
  return j;
}

std::vector<CharacterSeries> characters_from_json(const json& j) {
  require_keys(j, {"characters"}, "characters");
  const json& ja = field(j, "characters", "characters");
  if (!ja.is_array()) bad("characters: 'characters' must be an array");
  std::vector<CharacterSeries> out;
  std::set<std::string> seen;
  for (const json& e : ja) {
    const char* ew = "characters entry";
    require_keys(e, {"coeffs", "label", "offset"}, ew);
    CharacterSeries ch;
    ch.label = string_field(e, "label", ew);
    if (!seen.insert(ch.label).second)
      bad("characters entry: duplicate label '" + ch.label + "'");
    ch.offset = rational_field(e, "offset", ew);
    const json& jc = field(e, "coeffs", ew);
    if (!jc.is_array()) bad("characters entry: 'coeffs' must be an array of integers");
    for (const json& c : jc) {
      if (!c.is_number_integer())
        bad("characters entry: 'coeffs' must be an array of integers");
      ch.coeffs.push_back(c.get<long long>());
    }
    out.push_back(std::move(ch));
  }
  return out;
}

json load_json_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) bad("cannot open '" + p.string() + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    bad("invalid JSON in '" + p.string() + "': " + e.what());
  }
  return j;
}

void write_json_file(const std::filesystem::path& p, const json& j) {
  std::ofstream out(p);
  if (!out) bad("cannot open '" + p.string() + "' for writing");
  out << canonical_dump(j);
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace mdv
