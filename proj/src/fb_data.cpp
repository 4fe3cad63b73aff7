#include "mdv/fb_data.hpp"

#include <sstream>

#include "mdv/error.hpp"

namespace mdv {

bool f_admissible(const FusionTensor& N, const Key6& k) {
  const auto [a1, a2, a3, a4, a5, a6] = k;
  return N.at(a2, a3, a5) == 1 && N.at(a1, a5, a4) == 1 &&
         N.at(a1, a2, a6) == 1 && N.at(a6, a3, a4) == 1;
}

bool b_admissible(const FusionTensor& N, const Key6& k) {
  const auto [x, y, z, d, p, q] = k;
  return N.at(y, z, p) == 1 && N.at(x, p, d) == 1 &&
         N.at(x, z, q) == 1 && N.at(y, q, d) == 1;
}

bool b2_admissible(const FusionTensor& N, const Key6& k) {
  const auto [x, y, z, d, p, q] = k;
  return N.at(y, z, p) == 1 && N.at(x, p, d) == 1 &&
         N.at(y, z, q) == 1 && N.at(x, q, d) == 1;
}

bool triple_admissible(const FusionTensor& N, const Key3& k) {
  return N.at(k[0], k[1], k[2]) == 1;
}

namespace {
template <typename Key>
std::string key_str(const Key& k) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
  os << ")";
  return os.str();
}
}  // namespace

cplx fb_get(const std::map<Key6, cplx>& m, const Key6& k, const char* what) {
  auto it = m.find(k);
  if (it == m.end())
    throw Error(Errc::MissingEntry, std::string(what) + " entry absent at key " + key_str(k));
  return it->second;
}

cplx fb_get(const std::map<Key3, cplx>& m, const Key3& k, const char* what) {
  auto it = m.find(k);
  if (it == m.end())
    throw Error(Errc::MissingEntry, std::string(what) + " entry absent at key " + key_str(k));
  return it->second;
}

}  // namespace mdv
