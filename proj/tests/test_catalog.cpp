#include <doctest.h>

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mdv/catalog.hpp"
#include "mdv/error.hpp"
#include "mdv/fb_checks.hpp"
#include "mdv/fb_data.hpp"
#include "mdv/fusion.hpp"
#include "mdv/modular_data.hpp"
#include "mdv/rational.hpp"
#include "mdv/verlinde.hpp"

// The catalog is the data generator, so everything here is checked against
// side routes: fusion tensors against test-local combinatorial oracles
// (Clebsch-Gordan, Kac-table windows, the cyclic group law, brute-force ring
// scans), S-matrices and central charges against numbers frozen from a
// 30-digit run, the exchange layer against the hand-frozen solutions used in
// the fb suite, and characters against independent series expansions plus
// their literature prefixes.

namespace {

using mdv::CatalogEntry;
using mdv::Check;
using mdv::cplx;
using mdv::Errc;
using mdv::FBContext;
using mdv::FusionTensor;
using mdv::Key3;
using mdv::Key6;
using mdv::Rational;

const double kInvPhi = 0.6180339887498949;
const double kInvSqrtPhi = 0.7861513777574233;
const double kRt = 0.70710678118654752;  // 1/sqrt(2)

void expect_errc(const std::function<void()>& fn, Errc want) {
  try {
    fn();
    FAIL_CHECK("expected an error, got none");
  } catch (const mdv::Error& e) {
    CHECK(e.code() == want);
  }
}

// ---- independent fusion oracles ----

// su(2)_k in twice-spin units: channel c of (a,b) iff the triangle rule and
// the level truncation a+b+c <= 2k hold with a+b+c even.
FusionTensor cg_su2(long long k) {
  std::size_t n = static_cast<std::size_t>(k) + 1;
  FusionTensor N(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        long long aa = static_cast<long long>(a), bb = static_cast<long long>(b),
                  cc = static_cast<long long>(c);
        if ((aa + bb + cc) % 2 != 0) continue;
        if (std::llabs(aa - bb) <= cc && cc <= aa + bb && aa + bb + cc <= 2 * k)
          N.at(a, b, c) = 1;
      }
  return N;
}

// Kac-table orbit representatives for (p,q), minimal r then minimal s,
// sorted; plus the fusion windows.
struct KacOracle {
  std::vector<std::pair<long long, long long>> reps;
  std::map<std::pair<long long, long long>, std::size_t> idx;
};

KacOracle kac_reps(long long p, long long q) {
  KacOracle k;
  for (long long r = 1; r < p; ++r)
    for (long long s = 1; s < q; ++s)
      if (std::make_pair(r, s) <= std::make_pair(p - r, q - s))
        k.reps.emplace_back(r, s);
  std::sort(k.reps.begin(), k.reps.end());
  for (std::size_t i = 0; i < k.reps.size(); ++i) {
    auto [r, s] = k.reps[i];
    k.idx[{r, s}] = i;
    k.idx[{p - r, q - s}] = i;
  }
  return k;
}

FusionTensor bpz_minimal(long long p, long long q) {
  KacOracle k = kac_reps(p, q);
  FusionTensor N(k.reps.size());
  for (std::size_t i = 0; i < k.reps.size(); ++i)
    for (std::size_t j = 0; j < k.reps.size(); ++j) {
      auto [r1, s1] = k.reps[i];
      auto [r2, s2] = k.reps[j];
      for (long long r3 = std::llabs(r1 - r2) + 1;
           r3 <= std::min(r1 + r2 - 1, 2 * p - 1 - r1 - r2); r3 += 2)
        for (long long s3 = std::llabs(s1 - s2) + 1;
             s3 <= std::min(s1 + s2 - 1, 2 * q - 1 - s1 - s2); s3 += 2)
          N.at(i, j, k.idx.at({r3, s3})) += 1;
    }
  return N;
}

FusionTensor group_pointed(long long n) {
  FusionTensor N(static_cast<std::size_t>(n));
  for (std::size_t a = 0; a < N.n; ++a)
    for (std::size_t b = 0; b < N.n; ++b)
      N.at(a, b, (a + b) % N.n) = 1;
  return N;
}

bool ring_associative(const FusionTensor& N) {
  for (std::size_t a = 0; a < N.n; ++a)
    for (std::size_t b = 0; b < N.n; ++b)
      for (std::size_t c = 0; c < N.n; ++c)
        for (std::size_t d = 0; d < N.n; ++d) {
          unsigned l = 0, r = 0;
          for (std::size_t e = 0; e < N.n; ++e) {
            l += N.at(a, b, e) * N.at(e, c, d);
            r += N.at(b, c, e) * N.at(a, e, d);
          }
          if (l != r) return false;
        }
  return true;
}

double spectral_radius(const FusionTensor& N, std::size_t a) {
  Eigen::MatrixXd M(static_cast<long>(N.n), static_cast<long>(N.n));
  for (std::size_t b = 0; b < N.n; ++b)
    for (std::size_t c = 0; c < N.n; ++c)
      M(static_cast<long>(b), static_cast<long>(c)) = N.at(a, b, c);
  return M.eigenvalues().cwiseAbs().maxCoeff();
}

// ---- independent character expansions (same DPs as the character suite) ----

std::vector<long long> prod_distinct(std::size_t L) {
  std::vector<long long> c(L + 1, 0);
  c[0] = 1;
  for (std::size_t m = 1; m <= L; ++m)
    for (std::size_t j = L; j >= m; --j) c[j] += c[j - m];
  return c;
}

std::vector<long long> partitions(std::size_t L) {
  std::vector<long long> c(L + 1, 0);
  c[0] = 1;
  for (std::size_t m = 1; m <= L; ++m)
    for (std::size_t j = m; j <= L; ++j) c[j] += c[j - m];
  return c;
}

// P/M coefficient arrays of prod_{m odd} (1 +- x^m) up to x^(2L+1).
void ising_even_odd(std::size_t L, std::vector<long long>& vac,
                    std::vector<long long>& eps) {
  std::size_t n = 2 * L + 2;
  std::vector<long long> P(n, 0), M(n, 0);
  P[0] = M[0] = 1;
  for (std::size_t m = 1; m < n; m += 2)
    for (std::size_t j = n - 1; j >= m; --j) {
      P[j] += P[j - m];
      M[j] -= M[j - m];
      if (j == m) break;
    }
  vac.assign(L + 1, 0);
  eps.assign(L + 1, 0);
  for (std::size_t j = 0; j <= L; ++j) {
    vac[j] = (P[2 * j] + M[2 * j]) / 2;
    eps[j] = (P[2 * j + 1] - M[2 * j + 1]) / 2;
  }
}

// Theta-function exponent counts for Z/n, residue a: the number of j = a
// (mod n) with (j^2 - min(a, n-a)^2) / (2n) = k.
std::vector<long long> pointed_r(long long n, long long a, std::size_t L) {
  std::vector<long long> r(L + 1, 0);
  long long mn = std::min(a, n - a);
  for (long long t = -(8 * static_cast<long long>(L) / n + 8);
       t <= 8 * static_cast<long long>(L) / n + 8; ++t) {
    long long j = a + t * n;
    long long num = j * j - mn * mn;
    REQUIRE(num % (2 * n) == 0);
    long long k = num / (2 * n);
    if (k >= 0 && k <= static_cast<long long>(L)) ++r[static_cast<std::size_t>(k)];
  }
  return r;
}

std::vector<long long> conv(const std::vector<long long>& a,
                            const std::vector<long long>& b) {
  std::vector<long long> c(std::min(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) c[i] += a[j] * b[i - j];
  return c;
}

void check_prefix(const std::vector<long long>& got,
                  const std::vector<long long>& want) {
  REQUIRE(got.size() >= want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    INFO("coefficient " << i);
    CHECK(got[i] == want[i]);
  }
}

// ---- full exchange-layer battery ----

void require_fb_battery(const CatalogEntry& e) {
  REQUIRE(e.fb.has_value());
  FBContext ctx{e.md, e.N, *e.fb};
  std::vector<Check> checks = {
      mdv::check_fb_structural(ctx, 1e-9), mdv::check_fb_pentagon(ctx, 1e-9),
      mdv::check_fb_hexagon(ctx, 1e-9),    mdv::check_fb_b2_composite(ctx, 1e-9),
      mdv::check_fb_rigidity(ctx, 1e-9),   mdv::check_fb_ms_identity(ctx, 1e-9),
      mdv::check_fb_s_form3(ctx, 1e-9),    mdv::check_fb_nondegeneracy(ctx, 1e-6),
      mdv::check_fb_diag_eigen(ctx, 1e-9)};
  for (const Check& c : checks) {
    INFO(e.name << " " << c.name << " residual=" << c.max_residual
                << (c.witness.empty() ? "" : " at " + c.witness.front()));
    CHECK(c.pass);
  }
}

void check_verlinde_match(const CatalogEntry& e, double tol = 1e-9) {
  mdv::VerlindeResult vr = mdv::verlinde_fusion(e.md);
  CHECK(vr.N == e.N);
  INFO("integrality residual " << vr.max_integrality_residual);
  CHECK(vr.max_integrality_residual < tol);
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("su2 frozen level-1 and level-2 data") {
  CatalogEntry e1 = mdv::make_su2(1);
  CHECK(e1.family == "su2_level_k");
  CHECK(e1.name == "su2_1");
  REQUIRE(e1.params.size() == 1);
  CHECK(e1.params[0].first == "k");
  CHECK(e1.params[0].second == 1);
  REQUIRE(e1.md.labels == std::vector<std::string>{"j0", "j1/2"});
  CHECK(e1.md.dual == std::vector<std::size_t>{0, 1});
  CHECK(e1.md.h[0] == Rational(0));
  CHECK(e1.md.h[1] == Rational(1, 4));
  CHECK(e1.md.c == Rational(1));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      double want = (a == 1 && b == 1) ? -kRt : kRt;
      CHECK(std::abs(e1.md.S(a, b) - cplx(want, 0.0)) < 1e-15);
    }
  CHECK(!e1.fb.has_value());
  CHECK(!e1.characters.has_value());

  CatalogEntry e2 = mdv::make_su2(2);
  REQUIRE(e2.md.labels == std::vector<std::string>{"j0", "j1/2", "j1"});
  CHECK(e2.md.h[1] == Rational(3, 16));
  CHECK(e2.md.h[2] == Rational(1, 2));
  CHECK(e2.md.c == Rational(3, 2));
  double s2row0[3] = {0.5, kRt, 0.5};
  for (int b = 0; b < 3; ++b)
    CHECK(std::abs(e2.md.S(0, b) - cplx(s2row0[b], 0.0)) < 1e-15);
  // level truncation at work: j=1/2, j=1/2 -> only j0 at k=1, j0 and j1 at k=2
  CHECK(e1.N.at(1, 1, 1) == 0);
  CHECK(e2.N.at(1, 1, 1) == 0);  // parity
  CHECK(e2.N.at(1, 1, 2) == 1);
  CHECK(e2.N.at(2, 2, 2) == 0);  // 2+2+2 > 2k
}

TEST_CASE("vanishing S entries are exact zeros, not sine residue") {
  // sin(pi m/M) at integer multiples must not leave ~1e-16 garbage in the
  // emitted documents: a sign flip of such an entry would be invisible to
  // every residual check.
  CHECK(mdv::make_su2(2).md.S(1, 1) == cplx(0.0, 0.0));
  CHECK(mdv::make_su2(10).md.S(1, 5) == cplx(0.0, 0.0));
  CHECK(mdv::make_su2(10).md.S(3, 2) == cplx(0.0, 0.0));
  CatalogEntry m34 = mdv::make_minimal(3, 4);
  std::size_t s12 = m34.md.index("(1,2)");
  CHECK(m34.md.S(static_cast<long>(s12), static_cast<long>(s12)) ==
        cplx(0.0, 0.0));
}

TEST_CASE("su2 fusion matches the Clebsch-Gordan oracle and the Verlinde rounding") {
  for (long long k = 1; k <= 10; ++k) {
    CatalogEntry e = mdv::make_su2(k);
    INFO("level " << k);
    CHECK(e.N == cg_su2(k));
    CHECK(e.N.multiplicity_free());
    check_verlinde_match(e);
  }
}

TEST_CASE("minimal model frozen tables") {
  CatalogEntry m34 = mdv::make_minimal(3, 4);
  CHECK(m34.family == "minimal_model");
  CHECK(m34.name == "minimal_3_4");
  REQUIRE(m34.md.labels ==
          std::vector<std::string>{"(1,1)", "(1,2)", "(1,3)"});
  CHECK(m34.md.h[0] == Rational(0));
  CHECK(m34.md.h[1] == Rational(1, 16));
  CHECK(m34.md.h[2] == Rational(1, 2));
  CHECK(m34.md.c == Rational(1, 2));
  CHECK(m34.md.dual == std::vector<std::size_t>{0, 1, 2});
  // numerically identical S to the ising entry (same theory, other labels)
  CatalogEntry is = mdv::make_ising();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      CHECK(std::abs(m34.md.S(a, b) - is.md.S(a, b)) < 1e-14);
  CHECK(!m34.fb.has_value());
  CHECK(!m34.characters.has_value());

  CatalogEntry m25 = mdv::make_minimal(2, 5);
  REQUIRE(m25.md.labels == std::vector<std::string>{"(1,1)", "(1,2)"});
  CHECK(m25.md.h[1] == Rational(-1, 5));
  CHECK(m25.md.c == Rational(-22, 5));
  // frozen 30-digit values; note the vacuum-vacuum entry is negative in this
  // non-unitary member
  CHECK(std::abs(m25.md.S(0, 0) - cplx(-0.85065080835203993, 0)) < 1e-15);
  CHECK(std::abs(m25.md.S(0, 1) - cplx(0.52573111211913361, 0)) < 1e-15);
  CHECK(std::abs(m25.md.S(1, 1) - cplx(0.85065080835203993, 0)) < 1e-15);
  CHECK(m25.N.at(1, 1, 1) == 1);  // Lee-Yang ring
  bool note_found = false;
  for (const std::string& n : m25.notes)
    if (n.find("Perron") != std::string::npos) note_found = true;
  CHECK(note_found);

  CatalogEntry m35 = mdv::make_minimal(3, 5);
  REQUIRE(m35.md.labels ==
          std::vector<std::string>{"(1,1)", "(1,2)", "(1,3)", "(1,4)"});
  CHECK(m35.md.h[1] == Rational(-1, 20));
  CHECK(m35.md.h[2] == Rational(1, 5));
  CHECK(m35.md.h[3] == Rational(3, 4));
  CHECK(m35.md.c == Rational(-3, 5));
  double row0[4] = {0.60150095500754567, 0.37174803446018449,
                    -0.37174803446018449, -0.60150095500754567};
  for (int b = 0; b < 4; ++b)
    CHECK(std::abs(m35.md.S(0, b) - cplx(row0[b], 0.0)) < 1e-15);
}

TEST_CASE("minimal fusion matches the Kac-window oracle and Verlinde") {
  for (auto [p, q] : std::vector<std::pair<long long, long long>>{
           {3, 4}, {2, 5}, {3, 5}, {4, 5}}) {
    CatalogEntry e = mdv::make_minimal(p, q);
    INFO("(p,q)=(" << p << "," << q << ")");
    CHECK(e.N == bpz_minimal(p, q));
    CHECK(e.N.multiplicity_free());
    check_verlinde_match(e);
    CHECK_NOTHROW(mdv::validate_fusion_ring(e.N, e.md.vacuum, e.md.dual));
  }
}

TEST_CASE("pointed frozen data and Gauss-Milgram charges") {
  CatalogEntry z2 = mdv::make_pointed(2, 1);
  CHECK(z2.family == "pointed_cyclic");
  CHECK(z2.name == "pointed_2_1");
  REQUIRE(z2.md.labels == std::vector<std::string>{"0", "1"});
  CHECK(z2.md.h[1] == Rational(1, 4));
  CHECK(z2.md.c == Rational(1));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      double want = (a == 1 && b == 1) ? -kRt : kRt;
      CHECK(std::abs(z2.md.S(a, b) - cplx(want, 0.0)) < 1e-15);
    }

  CatalogEntry z32 = mdv::make_pointed(3, 2);
  CHECK(z32.md.h == std::vector<Rational>{Rational(0), Rational(1, 3), Rational(1, 3)});
  CHECK(z32.md.c == Rational(2));
  CHECK(z32.md.dual == std::vector<std::size_t>{0, 2, 1});
  CHECK(std::abs(z32.md.S(1, 1) - cplx(-0.28867513459481288, -0.5)) < 1e-15);

  CatalogEntry z41 = mdv::make_pointed(4, 1);
  CHECK(z41.md.h == std::vector<Rational>{Rational(0), Rational(1, 8),
                                          Rational(1, 2), Rational(1, 8)});
  CHECK(z41.md.c == Rational(1));
  CHECK(z41.md.dual == std::vector<std::size_t>{0, 3, 2, 1});
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      cplx want = 0.5 * std::pow(cplx(0, 1), (a * b) % 4);
      CHECK(std::abs(z41.md.S(a, b) - want) < 1e-14);
    }

  // Gauss-Milgram central charges, frozen from the 30-digit run
  CHECK(mdv::make_pointed(5, 2).md.c == Rational(0));
  CHECK(mdv::make_pointed(6, 1).md.c == Rational(1));

  for (auto [n, m] : std::vector<std::pair<long long, long long>>{
           {2, 1}, {3, 2}, {4, 1}, {5, 2}, {6, 1}}) {
    CatalogEntry e = mdv::make_pointed(n, m);
    INFO("(n,m)=(" << n << "," << m << ")");
    CHECK(e.N == group_pointed(n));
    check_verlinde_match(e);
  }
}

TEST_CASE("pointed exchange layer passes the battery with frozen spot values") {
  CatalogEntry z32 = mdv::make_pointed(3, 2);
  require_fb_battery(z32);
  // even m makes every F entry +1
  for (const auto& [k, v] : z32.fb->F) CHECK(std::abs(v - cplx(1, 0)) < 1e-15);
  CHECK(std::abs(z32.fb->sigma12.at(Key3{1, 1, 2}) - cplx(-1, 0)) < 1e-15);
  CHECK(std::abs(z32.fb->sigma12.at(Key3{2, 2, 1}) - cplx(-1, 0)) < 1e-15);

  CatalogEntry z41 = mdv::make_pointed(4, 1);
  require_fb_battery(z41);
  CHECK(std::abs(z41.fb->F.at(Key6{3, 3, 3, 1, 2, 2}) - cplx(-1, 0)) < 1e-15);
  CHECK(std::abs(z41.fb->F.at(Key6{1, 3, 3, 3, 2, 0}) - cplx(-1, 0)) < 1e-15);
  CHECK(std::abs(z41.fb->F.at(Key6{2, 2, 2, 2, 0, 0}) - cplx(1, 0)) < 1e-15);
  CHECK(std::abs(z41.fb->sigma12.at(Key3{1, 1, 2}) - cplx(1, 0)) < 1e-15);
  // the dual-pair pins survive the gauge that enforces them
  CHECK(std::abs(z41.fb->sigma12.at(Key3{1, 3, 0}) - cplx(1, 0)) < 1e-15);
  CHECK(std::abs(z41.fb->sigma12.at(Key3{3, 1, 0}) - cplx(1, 0)) < 1e-15);
}

TEST_CASE("pointed Z/2 refuses an exchange layer and says why") {
  CatalogEntry z2 = mdv::make_pointed(2, 1);
  CHECK(!z2.fb.has_value());
  bool found = false;
  for (const std::string& n : z2.notes)
    if (n.find("Frobenius-Schur") != std::string::npos) found = true;
  CHECK(found);
  CHECK(z2.characters.has_value());
}

TEST_CASE("lattice solver agrees with the analytic pointed construction") {
  CatalogEntry z32 = mdv::make_pointed(3, 2);
  mdv::FBData solved = mdv::solve_fb_lattice(z32.md, z32.N);
  FBContext ca{z32.md, z32.N, *z32.fb};
  FBContext cs{z32.md, z32.N, solved};
  // gauge-invariant comparison: trace matrices and diagonal exchange phases
  mdv::Mat ta = mdv::trace_matrix(ca), ts = mdv::trace_matrix(cs);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(std::abs(ta(a, b) - ts(a, b)) < 1e-9);
  for (const auto& [k, v] : z32.fb->sigma12)
    if (k[0] == k[1]) CHECK(std::abs(v - solved.sigma12.at(k)) < 1e-9);

  // the semion ring admits no layer over the lattice either
  CatalogEntry z2 = mdv::make_pointed(2, 1);
  expect_errc([&] { mdv::solve_fb_lattice(z2.md, z2.N); },
              Errc::OracleSearchFailed);
}

TEST_CASE("fibonacci entry reproduces the hand-frozen solution") {
  // independent ring scan: every multiplicity is associative for a single
  // self-dual generator, so the cut is multiplicity-freeness and then a
  // nontrivial dimension
  std::vector<unsigned> assoc;
  for (unsigned n0 = 0; n0 <= 4; ++n0) {
    FusionTensor N(2);
    N.at(0, 0, 0) = N.at(0, 1, 1) = N.at(1, 0, 1) = N.at(1, 1, 0) = 1;
    N.at(1, 1, 1) = n0;
    if (ring_associative(N)) assoc.push_back(n0);
  }
  CHECK(assoc == std::vector<unsigned>{0, 1, 2, 3, 4});

  CatalogEntry e = mdv::make_fibonacci();
  CHECK(e.family == "fibonacci");
  REQUIRE(e.md.labels == std::vector<std::string>{"e", "tau"});
  CHECK(e.md.h[1] == Rational(2, 5));
  CHECK(e.md.c == Rational(14, 5));
  CHECK(e.N.at(1, 1, 1) == 1);  // the multiplicity-free ring with d > 1
  CHECK(spectral_radius(e.N, 1) > 1.1);
  check_verlinde_match(e);

  REQUIRE(e.fb.has_value());
  CHECK(std::abs(e.fb->F.at(Key6{1, 1, 1, 0, 1, 1}) - cplx(1, 0)) < 1e-12);
  CHECK(std::abs(e.fb->F.at(Key6{1, 1, 1, 1, 0, 0}) - cplx(kInvPhi, 0)) < 1e-12);
  CHECK(std::abs(e.fb->F.at(Key6{1, 1, 1, 1, 0, 1}) - cplx(kInvSqrtPhi, 0)) < 1e-12);
  CHECK(std::abs(e.fb->F.at(Key6{1, 1, 1, 1, 1, 0}) - cplx(kInvSqrtPhi, 0)) < 1e-12);
  CHECK(std::abs(e.fb->F.at(Key6{1, 1, 1, 1, 1, 1}) - cplx(-kInvPhi, 0)) < 1e-12);
  CHECK(std::abs(e.fb->sigma12.at(Key3{1, 1, 0}) - cplx(1, 0)) < 1e-12);
  CHECK(std::abs(e.fb->sigma12.at(Key3{1, 1, 1}) - cplx(-1, 0)) < 1e-12);
  CHECK(std::abs(e.fb->sigma23.at(Key3{1, 1, 1}) - cplx(-1, 0)) < 1e-12);
  require_fb_battery(e);
  CHECK(!e.characters.has_value());
}

TEST_CASE("ising entry reproduces the hand-frozen solution") {
  // independent rank-3 scan over the symmetric multiplicity-free rings with
  // three self-dual labels; frozen solution set from the brute-force run
  std::vector<std::array<unsigned, 4>> sols;
  for (unsigned A = 0; A <= 1; ++A)
    for (unsigned B = 0; B <= 1; ++B)
      for (unsigned C = 0; C <= 1; ++C)
        for (unsigned D = 0; D <= 1; ++D) {
          FusionTensor N(3);
          for (std::size_t a = 0; a < 3; ++a) {
            N.at(0, a, a) = N.at(a, 0, a) = 1;
            if (a != 0) N.at(a, a, 0) = 1;
          }
          N.at(0, 0, 0) = 1;
          N.at(1, 1, 1) = A;
          N.at(1, 1, 2) = B;
          N.at(1, 2, 1) = N.at(2, 1, 1) = B;
          N.at(2, 2, 1) = C;
          N.at(1, 2, 2) = N.at(2, 1, 2) = C;
          N.at(2, 2, 2) = D;
          if (ring_associative(N)) sols.push_back({A, B, C, D});
        }
  std::vector<std::array<unsigned, 4>> frozen = {
      {0, 0, 1, 0}, {0, 0, 1, 1}, {0, 1, 0, 0},
      {0, 1, 1, 1}, {1, 1, 0, 0}, {1, 1, 1, 0}};
  CHECK(sols == frozen);

  CatalogEntry e = mdv::make_ising();
  REQUIRE(e.md.labels == std::vector<std::string>{"1", "sigma", "eps"});
  CHECK(e.md.h[1] == Rational(1, 16));
  CHECK(e.md.h[2] == Rational(1, 2));
  CHECK(e.md.c == Rational(1, 2));
  // the selector has to land on (0,1,0,0): d_sigma = sqrt(2), d_eps = 1
  CHECK(e.N.at(1, 1, 1) == 0);
  CHECK(e.N.at(1, 1, 2) == 1);
  CHECK(e.N.at(2, 2, 1) == 0);
  CHECK(e.N.at(2, 2, 2) == 0);
  CHECK(std::abs(spectral_radius(e.N, 1) - std::sqrt(2.0)) < 1e-9);
  check_verlinde_match(e);

  REQUIRE(e.fb.has_value());
  std::vector<std::pair<Key6, double>> frozen_f = {
      {{1, 1, 1, 1, 0, 0}, kRt},   {{1, 1, 1, 1, 0, 2}, kRt},
      {{1, 1, 1, 1, 2, 0}, kRt},   {{1, 1, 1, 1, 2, 2}, -kRt},
      {{1, 1, 2, 2, 1, 0}, 1.0},   {{1, 1, 2, 0, 1, 2}, 1.0},
      {{1, 2, 1, 0, 1, 1}, 1.0},   {{1, 2, 1, 2, 1, 1}, -1.0},
      {{2, 1, 1, 2, 0, 1}, 1.0},   {{2, 1, 1, 0, 2, 1}, 1.0},
      {{2, 2, 1, 1, 1, 0}, 1.0},   {{2, 1, 2, 1, 1, 1}, -1.0},
      {{1, 2, 2, 1, 0, 1}, 1.0},   {{2, 2, 2, 2, 0, 0}, 1.0}};
  for (const auto& [k, v] : frozen_f) {
    INFO("F key (" << k[0] << k[1] << k[2] << k[3] << k[4] << k[5] << ")");
    CHECK(std::abs(e.fb->F.at(k) - cplx(v, 0)) < 1e-12);
  }
  for (const auto& [k, v] : e.fb->sigma12) CHECK(std::abs(v - cplx(1, 0)) < 1e-12);
  for (const auto& [k, v] : e.fb->sigma23) CHECK(std::abs(v - cplx(1, 0)) < 1e-12);
  require_fb_battery(e);
}

TEST_CASE("trivial entry carries the whole bundle") {
  CatalogEntry e = mdv::make_trivial();
  CHECK(e.md.size() == 1);
  CHECK(e.md.c == Rational(0));
  REQUIRE(e.fb.has_value());
  require_fb_battery(e);
  REQUIRE(e.characters.has_value());
  REQUIRE(e.characters->size() == 1);
  CHECK((*e.characters)[0].offset == Rational(0));
  CHECK((*e.characters)[0].coeffs == std::vector<long long>{1});
}

TEST_CASE("catalog characters match the independent expansions") {
  CatalogEntry is = mdv::make_ising();
  REQUIRE(is.characters.has_value());
  const auto& ch = *is.characters;
  REQUIRE(ch.size() == 3);
  CHECK(ch[0].label == "1");
  CHECK(ch[0].offset == Rational(-1, 48));
  CHECK(ch[1].offset == Rational(1, 24));
  CHECK(ch[2].offset == Rational(23, 48));
  for (const auto& c : ch) REQUIRE(c.coeffs.size() == 301);

  check_prefix(ch[0].coeffs, {1, 0, 1, 1, 2, 2, 3, 3, 5, 5, 7, 8, 11, 12, 16, 18});
  check_prefix(ch[1].coeffs, {1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15, 18, 22, 27});
  check_prefix(ch[2].coeffs, {1, 1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 9, 12, 14, 17, 20});

  std::vector<long long> vac, eps;
  ising_even_odd(300, vac, eps);
  CHECK(ch[0].coeffs == vac);
  CHECK(ch[1].coeffs == prod_distinct(300));
  CHECK(ch[2].coeffs == eps);

  CatalogEntry z2 = mdv::make_pointed(2, 1);
  REQUIRE(z2.characters.has_value());
  CHECK((*z2.characters)[0].offset == Rational(-1, 24));
  CHECK((*z2.characters)[1].offset == Rational(5, 24));
  std::vector<long long> p = partitions(300);
  check_prefix((*z2.characters)[0].coeffs,
               {1, 3, 4, 7, 13, 19, 29, 43, 62, 90, 126, 174});
  check_prefix((*z2.characters)[1].coeffs,
               {2, 2, 6, 8, 14, 20, 34, 46, 70, 96, 138, 186});
  for (long long a = 0; a < 2; ++a)
    CHECK((*z2.characters)[static_cast<std::size_t>(a)].coeffs ==
          conv(pointed_r(2, a, 300), p));

  CatalogEntry z41 = mdv::make_pointed(4, 1);
  REQUIRE(z41.characters.has_value());
  REQUIRE(z41.characters->size() == 4);
  check_prefix((*z41.characters)[0].coeffs,
               {1, 1, 4, 5, 9, 13, 21, 29, 46, 62, 90, 122});
  check_prefix((*z41.characters)[2].coeffs,
               {2, 2, 4, 6, 12, 16, 26, 36, 54, 74, 106, 142});
  for (long long a = 0; a < 4; ++a)
    CHECK((*z41.characters)[static_cast<std::size_t>(a)].coeffs ==
          conv(pointed_r(4, a, 300), p));
  CHECK((*z41.characters)[1].coeffs == (*z41.characters)[3].coeffs);

  // no characters where the family does not define them in our conventions
  CHECK(!mdv::make_pointed(3, 2).characters.has_value());
  CHECK(!mdv::make_pointed(5, 2).characters.has_value());
}

TEST_CASE("parameter validation") {
  expect_errc([] { mdv::make_su2(0); }, Errc::InvalidParameters);
  expect_errc([] { mdv::make_su2(17); }, Errc::InvalidParameters);
  expect_errc([] { mdv::make_minimal(4, 6); }, Errc::InvalidParameters);
  expect_errc([] { mdv::make_minimal(3, 3); }, Errc::InvalidParameters);
  expect_errc([] { mdv::make_minimal(5, 3); }, Errc::InvalidParameters);
  expect_errc([] { mdv::make_minimal(7, 8); }, Errc::InvalidParameters);
  expect_errc([] { mdv::make_pointed(4, 2); }, Errc::InvalidParameters);
  expect_errc([] { mdv::make_pointed(3, 1); }, Errc::InvalidParameters);
  expect_errc([] { mdv::make_pointed(1, 1); }, Errc::InvalidParameters);
  expect_errc([] { mdv::make_pointed(13, 2); }, Errc::InvalidParameters);
  expect_errc([] { mdv::make_pointed(2, 5); }, Errc::InvalidParameters);
}

TEST_CASE("name dispatch and the shipped list") {
  std::vector<std::string> names = mdv::catalog_names();
  std::vector<std::string> want = {
      "trivial",      "fibonacci",    "ising",       "su2_1",  "su2_2",
      "su2_3",        "su2_4",        "su2_5",       "su2_6",  "su2_7",
      "su2_8",        "su2_9",        "su2_10",      "minimal_2_5",
      "minimal_3_4",  "minimal_3_5",  "pointed_2_1", "pointed_3_2",
      "pointed_4_1"};
  CHECK(names == want);
  for (const std::string& n : names) {
    CatalogEntry e = mdv::make_by_name(n);
    CHECK(e.name == n);
  }
  CHECK(mdv::make_by_name("su2_7").md.size() == 8);
  CHECK(mdv::make_by_name("minimal_4_5").md.size() == 6);
  expect_errc([] { mdv::make_by_name("bogus"); }, Errc::InvalidParameters);
  expect_errc([] { mdv::make_by_name("su2_"); }, Errc::InvalidParameters);
  expect_errc([] { mdv::make_by_name("minimal_3"); }, Errc::InvalidParameters);
  expect_errc([] { mdv::make_by_name("pointed_2_1_1"); }, Errc::InvalidParameters);
  expect_errc([] { mdv::make_by_name(""); }, Errc::InvalidParameters);
}

TEST_CASE("generation is deterministic") {
  for (const std::string& n :
       {std::string("ising"), std::string("fibonacci"), std::string("pointed_4_1")}) {
    CatalogEntry a = mdv::make_by_name(n);
    CatalogEntry b = mdv::make_by_name(n);
    REQUIRE(a.fb.has_value());
    CHECK(a.fb->F == b.fb->F);
    CHECK(a.fb->B == b.fb->B);
    CHECK(a.fb->B2 == b.fb->B2);
    CHECK(a.fb->sigma12 == b.fb->sigma12);
    CHECK(a.fb->sigma23 == b.fb->sigma23);
    if (a.characters.has_value()) {
      REQUIRE(b.characters.has_value());
      for (std::size_t i = 0; i < a.characters->size(); ++i)
        CHECK((*a.characters)[i].coeffs == (*b.characters)[i].coeffs);
    }
  }
}

}  // TEST_SUITE("catalog")
