#pragma once
#include <cstddef>
#include <vector>

#include "mdv/error.hpp"
#include "mdv/linalg.hpp"

namespace mdv {

// Fusion multiplicities N_{a1 a2}^{a3}, dense over label indices.
struct FusionTensor {
  std::size_t n = 0;
  std::vector<unsigned> mult;  // layout (a1*n + a2)*n + a3

  FusionTensor() = default;
  explicit FusionTensor(std::size_t n_) : n(n_), mult(n_ * n_ * n_, 0) {}

  unsigned& at(std::size_t a1, std::size_t a2, std::size_t a3) {
    return mult[(a1 * n + a2) * n + a3];
  }
  unsigned at(std::size_t a1, std::size_t a2, std::size_t a3) const {
    return mult[(a1 * n + a2) * n + a3];
  }

  // Matrix of left multiplication by a2: rows a1, columns a3.
  MatR matrix(std::size_t a2) const;

  bool multiplicity_free() const;

  friend bool operator==(const FusionTensor&, const FusionTensor&) = default;
};

// Checks the ring axioms: unit law for the vacuum, dual pairing
// N_{a1 a2}^{e} = delta_{a2, a1'}, commutativity, associativity, and
// Frobenius reciprocity N_{a1 a2}^{a3} = N_{a1' a3}^{a2}.
// Throws Errc::FusionInvariant naming the first violation.
void validate_fusion_ring(const FusionTensor& N, std::size_t vacuum,
                          const std::vector<std::size_t>& dual);

}  // namespace mdv
