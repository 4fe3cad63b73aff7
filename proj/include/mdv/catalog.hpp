#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mdv/characters.hpp"
#include "mdv/fb_data.hpp"
#include "mdv/fusion.hpp"
#include "mdv/modular_data.hpp"

namespace mdv {

// One generated example theory. The fusion tensor is always computed from
// family combinatorics (Clebsch-Gordan truncation, Kac-table windows, group
// multiplication, or an exhaustive ring scan), never from the S-matrix, so
// that the Verlinde computation downstream has something independent to hit.
// fb and characters are present only where the family provides them.
struct CatalogEntry {
  std::string family;  // "su2_level_k", "minimal_model", "pointed_cyclic",
                       // "ising", "fibonacci", "trivial"
  std::string name;    // canonical fixture name, e.g. "su2_3", "pointed_4_1"
  std::vector<std::pair<std::string, long long>> params;
  ModularData md;
  FusionTensor N;
  std::optional<FBData> fb;
  std::optional<std::vector<CharacterSeries>> characters;
  std::vector<std::string> notes;
};

CatalogEntry make_trivial();
CatalogEntry make_fibonacci();
CatalogEntry make_ising();

// Affine su(2) at level k (1 <= k <= 16): labels "j0","j1/2",...,"jk/2",
// Kac-Peterson S, h_j = j(j+1)/(k+2), truncated Clebsch-Gordan fusion.
CatalogEntry make_su2(long long k);

// Virasoro minimal model (p,q): 2 <= p < q coprime, at most 12 primaries.
// Labels "(r,s)" name the Kac-table orbit representative with minimal r
// (then minimal s). Non-unitary members are kept as-is; for those the vacuum
// column of S is not the Perron column.
CatalogEntry make_minimal(long long p, long long q);

// Pointed theory on Z/n (2 <= n <= 12) with quadratic form a -> m a^2/(2n),
// gcd(m,n) = 1 and mn even. The central charge comes out of the Gauss-Milgram
// sum. The exchange layer is constructed analytically and then put through
// the full check battery; when a self-dual label carries a negative
// Frobenius-Schur indicator the layer cannot satisfy our unit pins, fb stays
// empty, and a note records the obstruction. Characters (lattice theta over
// eta) are attached when m = 1 and n is even.
CatalogEntry make_pointed(long long n, long long m);

// Parses "su2_3", "minimal_3_4", "pointed_4_1", "ising", "fibonacci",
// "trivial". Throws Errc::InvalidParameters for anything else.
CatalogEntry make_by_name(const std::string& name);

// Names of the shipped fixture set, in emission order.
std::vector<std::string> catalog_names();

// Exhaustive pentagon/hexagon solve over the documented phase lattice:
// F candidates s * d^{p/2} with s = +-1, p in {-2..2}, d the largest fusion
// eigenvalue; exchange candidates are fourth roots of unity. The canonical
// gauge keeps every F-block unitary, which removes the vertex-rescaling
// freedom the lattice would otherwise sample. Searches in canonical order
// (positive magnitudes first), validates each complete candidate with the
// full check battery, and returns the first survivor. Throws
// Errc::OracleSearchFailed when the lattice holds none.
FBData solve_fb_lattice(const ModularData& md, const FusionTensor& N);

}  // namespace mdv
