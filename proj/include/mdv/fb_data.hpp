#pragma once
#include <array>
#include <cstddef>
#include <map>
#include <utility>

#include "mdv/fusion.hpp"
#include "mdv/linalg.hpp"

namespace mdv {

using Key3 = std::array<std::size_t, 3>;
using Key6 = std::array<std::size_t, 6>;

// Scalar matrix elements of the fusing/braiding isomorphisms in the
// multiplicity-free case, keyed by label indices. Slot conventions are frozen
// in docs/conventions.md; in brief, for F the key is (a1,a2,a3,a4,a5,a6) for
// the change of basis from the product tree a1 x (a2 x a3; a5) -> a4 to the
// iterate trees (a1 x a2; a6) x a3 -> a4, and for B/B2 the key is
// (x,y,z,d,p,q) for the exchange of x past y over a fixed third leg z.
struct FBData {
  std::map<Key6, cplx> F;
  std::map<std::pair<int, Key6>, cplx> B;  // r in {0, -1}
  std::map<Key6, cplx> B2;
  std::map<Key3, cplx> sigma12, sigma23;
};

// Admissibility of an F key: all four fusion spaces along the two trees are
// one-dimensional.
bool f_admissible(const FusionTensor& N, const Key6& k);

// Admissibility of a B key (x,y,z,d,p,q): source tree x x (y x z; p) -> d
// and target tree y x (x x z; q) -> d both exist.
bool b_admissible(const FusionTensor& N, const Key6& k);

// Admissibility of a B2 key (x,y,z,d,p,q): the double exchange returns to the
// original bracketing, so both p and q are channels of (y,z) under x -> d.
bool b2_admissible(const FusionTensor& N, const Key6& k);

// N_{a1 a2}^{a3} == 1.
bool triple_admissible(const FusionTensor& N, const Key3& k);

// Lookup that throws Errc::MissingEntry with a description.
cplx fb_get(const std::map<Key6, cplx>& m, const Key6& k, const char* what);
cplx fb_get(const std::map<Key3, cplx>& m, const Key3& k, const char* what);

}  // namespace mdv
