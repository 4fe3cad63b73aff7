#pragma once
#include <array>
#include <cstdint>
#include <vector>

#include "mdv/fusion.hpp"
#include "mdv/modular_data.hpp"

namespace mdv {

struct VerlindeResult {
  FusionTensor N;
  double max_integrality_residual = 0.0;
  std::array<std::size_t, 3> worst_triple{0, 0, 0};
};

// N_{a1 a2}^{a3} = sum_{a4} S(a1,a4) S(a2,a4) S(a4,a3') / S(e,a4), rounded.
// Throws VacuumEntryZero if some S(e,a4) vanishes, NonIntegral if an entry is
// further than int_tol from an integer, NegativeEntry if one rounds negative.
VerlindeResult verlinde_fusion(const ModularData& md, double int_tol = 1e-6);

struct DiagonalizationResult {
  double max_offdiag = 0.0;    // off-diagonal entries of S^{-1} Ntilde(a2) S
  double max_eigen_dev = 0.0;  // diagonal vs S(a2,a4)/S(e,a4)
  std::vector<std::string> witness;
};

DiagonalizationResult diagonalization_residuals(const ModularData& md,
                                                const FusionTensor& N);

// d_a = S(e,a)/S(e,e); d_e is exactly 1.
std::vector<cplx> quantum_dimensions(const ModularData& md);

// Least-squares scalar lambda minimizing |S*S - lambda*C|_F, with C the
// charge conjugation permutation; informational.
struct ChargeConjugationFit {
  cplx lambda;
  double residual = 0.0;
};
ChargeConjugationFit s_squared_vs_conjugation(const ModularData& md);

// Reconstructs an S-matrix from a fusion tensor alone: simultaneous
// diagonalization of the fusion matrices, column scaling from S S^T = C,
// then a sign/ordering search making S symmetric with an exact Verlinde
// round-trip. Deterministic for a fixed seed.
struct SFromFusionResult {
  Mat S;
  int draws_used = 0;
};

SFromFusionResult s_from_fusion(const FusionTensor& N, std::size_t vacuum,
                                const std::vector<std::size_t>& dual,
                                std::uint64_t seed = 0);

}  // namespace mdv
