#pragma once
#include <cstddef>
#include <string>
#include <vector>

#include "mdv/linalg.hpp"
#include "mdv/rational.hpp"

namespace mdv {

// Finite data of a rational theory: ordered labels, the duality involution,
// exact conformal weights h_a, exact central charge c, and the S-matrix.
// Instances are only created through make(), which enforces the structural
// invariants (vacuum fixed by duality, h_e = 0, S invertible, ...).
struct ModularData {
  std::vector<std::string> labels;
  std::size_t vacuum = 0;
  std::vector<std::size_t> dual;
  std::vector<Rational> h;
  Rational c;
  Mat S;

  static ModularData make(std::vector<std::string> labels, std::size_t vacuum,
                          std::vector<std::size_t> dual, std::vector<Rational> h,
                          Rational c, Mat S);

  std::size_t size() const { return labels.size(); }
  std::size_t index(const std::string& label) const;  // throws MissingEntry

  // Twist theta_a = e^{2 pi i h_a}.
  cplx twist(std::size_t a) const { return unit_phase(h[a]); }
};

}  // namespace mdv
