#pragma once
#include <string>
#include <vector>

#include "mdv/linalg.hpp"
#include "mdv/modular_data.hpp"
#include "mdv/rational.hpp"
#include "mdv/report.hpp"

namespace mdv {

// Truncated q-series of a graded trace: q^{offset} * sum_k coeffs[k] q^k,
// offset = h_a - c/24 exactly.
struct CharacterSeries {
  std::string label;
  Rational offset;
  std::vector<long long> coeffs;
};

// Partial sum at q = e^{2 pi i tau}; throws TauNotInUpperHalfPlane if
// Im(tau) <= 0 and TruncationTooShort if the series is empty.
cplx eval_character(const CharacterSeries& ch, cplx tau);

// Crude geometric tail estimate |coeffs.back()| |q|^{offset+L} / (1-|q|),
// reported in check notes (not itself a rigorous bound for growing series).
double character_tail_estimate(const CharacterSeries& ch, double q_abs);

// Exact structural gate for the transform checks: one series per label in
// label order, offset == h_a - c/24 as rationals, nonempty coefficients.
// max_residual is 0 or 1.
Check check_character_offset(const ModularData& md,
                             const std::vector<CharacterSeries>& chs);

// chi_a(-1/tau) vs sum_b S_ab chi_b(tau) at each sample point.
Check check_character_s_transform(const ModularData& md,
                                  const std::vector<CharacterSeries>& chs,
                                  const std::vector<cplx>& taus, double tol);

// chi_a(tau+1) vs e^{2 pi i offset} chi_a(tau); exact on truncations, so this
// only probes the offset/phase plumbing (informational).
Check check_character_t_transform(const ModularData& md,
                                  const std::vector<CharacterSeries>& chs,
                                  const std::vector<cplx>& taus, double tol);

// S^2 applied to the evaluated character vector vs charge conjugation
// (informational).
Check check_character_s_squared(const ModularData& md,
                                const std::vector<CharacterSeries>& chs,
                                const std::vector<cplx>& taus, double tol);

}  // namespace mdv
