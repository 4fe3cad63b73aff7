#include "mdv/fusion.hpp"

#include <string>

namespace mdv {

namespace {
std::string triple(std::size_t a1, std::size_t a2, std::size_t a3) {
  return "(" + std::to_string(a1) + "," + std::to_string(a2) + "," +
         std::to_string(a3) + ")";
}
}  // namespace

MatR FusionTensor::matrix(std::size_t a2) const {
  MatR m(n, n);
  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t a3 = 0; a3 < n; ++a3)
      m(a1, a3) = static_cast<double>(at(a1, a2, a3));
  return m;
}

bool FusionTensor::multiplicity_free() const {
  for (unsigned v : mult)
    if (v > 1) return false;
  return true;
}

void validate_fusion_ring(const FusionTensor& N, std::size_t vacuum,
                          const std::vector<std::size_t>& dual) {
  const std::size_t n = N.n;
  if (dual.size() != n) throw Error(Errc::DimensionMismatch, "dual size vs tensor");
  auto fail = [](const std::string& msg) { throw Error(Errc::FusionInvariant, msg); };

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (N.at(vacuum, a, b) != (a == b ? 1u : 0u))
        fail("unit law (left) at " + triple(vacuum, a, b));
      if (N.at(a, vacuum, b) != (a == b ? 1u : 0u))
        fail("unit law (right) at " + triple(a, vacuum, b));
      if (N.at(a, b, vacuum) != (b == dual[a] ? 1u : 0u))
        fail("dual pairing at " + triple(a, b, vacuum));
    }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (N.at(a, b, c) != N.at(b, a, c))
          fail("commutativity at " + triple(a, b, c));
        if (N.at(a, b, c) != N.at(dual[a], c, b))
          fail("Frobenius reciprocity at " + triple(a, b, c));
      }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          unsigned long lhs = 0, rhs = 0;
          for (std::size_t x = 0; x < n; ++x) {
            lhs += static_cast<unsigned long>(N.at(a, b, x)) * N.at(x, c, d);
            rhs += static_cast<unsigned long>(N.at(b, c, x)) * N.at(a, x, d);
          }
          if (lhs != rhs)
            fail("associativity at (" + std::to_string(a) + "," + std::to_string(b) +
                 "," + std::to_string(c) + ";" + std::to_string(d) + ")");
        }
}

}  // namespace mdv
