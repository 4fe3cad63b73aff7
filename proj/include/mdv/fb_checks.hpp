#pragma once
#include <cstddef>
#include <vector>

#include "mdv/fb_data.hpp"
#include "mdv/fusion.hpp"
#include "mdv/modular_data.hpp"
#include "mdv/report.hpp"

namespace mdv {

// Bundles the three ingredients every consistency check consumes. All three
// references must outlive the context.
struct FBContext {
  const ModularData& md;
  const FusionTensor& N;
  const FBData& fb;
};

// F-block for the outer labels (a1,a2,a3;a4): rows indexed by the admissible
// intermediate a5, columns by the admissible a6, in increasing label order.
struct FBlock {
  std::vector<std::size_t> rows, cols;
  Mat M;
};
FBlock f_block(const FBContext& ctx, std::size_t a1, std::size_t a2,
               std::size_t a3, std::size_t a4);

// Exchange eigen-phase rho_r(a,b;c) = exp((2r+1) pi i (h_c - h_a - h_b)) *
// sigma12(a,b,c), exact in the rational phase.
cplx exchange_phase(const FBContext& ctx, int r, std::size_t a, std::size_t b,
                    std::size_t c);

// Rigidity scalar F(a, dual a, a, a, vacuum, vacuum); throws
// Errc::MissingEntry when absent.
cplx rigidity_scalar(const FBContext& ctx, std::size_t a);

// Trace matrix T[a1,a2] = B2(a2, dual a1, a1, a2, e, e) /
// (F_rig(a1) F_rig(a2)).
Mat trace_matrix(const FBContext& ctx);

// Key-set and pin validation: every stored key admissible, every admissible
// key stored (F, B for r in {0,-1}, B2, sigma12, sigma23); unit pins on F and
// both sigmas; sigma involutions; the sigma braid relation. Multiplicity
// violations are reported here as well.
Check check_fb_structural(const FBContext& ctx, double tol);

// Pentagon identity for F on all admissible configurations.
Check check_fb_pentagon(const FBContext& ctx, double tol);

// Hexagon: stored B matches F . diag(rho_r) . F^{-1} blockwise, and the
// three-step composite equals rho_r(x,p;d)-scaled F, for both r = 0 and -1.
Check check_fb_hexagon(const FBContext& ctx, double tol);

// Stored B2 matches F . diag(exp(-2 pi i Delta)) . F^{-1} blockwise.
Check check_fb_b2_composite(const FBContext& ctx, double tol);

// |F_rig(a)| = 1 / |d_a| for every label, with d from the S-matrix; also
// flags vanishing scalars.
Check check_fb_rigidity(const FBContext& ctx, double tol);

// Moore-Seiberg closure on every admissible triple.
Check check_fb_ms_identity(const FBContext& ctx, double tol);

// S(a1,a2) = S(e,e) * T[a1,a2] entrywise.
Check check_fb_s_form3(const FBContext& ctx, double tol);

// |det T| must exceed det_floor; max_residual reports |det T| itself.
Check check_fb_nondegeneracy(const FBContext& ctx, double det_floor);

// Cross-check B2(a4, dual a2, a2, a4, e, e) / F_rig(a2) = S(a2,a4) / S(e,a4).
Check check_fb_diag_eigen(const FBContext& ctx, double tol);

}  // namespace mdv
