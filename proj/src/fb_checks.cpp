#include "mdv/fb_checks.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "mdv/error.hpp"
#include "mdv/rational.hpp"
#include "mdv/verlinde.hpp"

namespace mdv {

namespace {

std::vector<std::size_t> channels(const FusionTensor& N, std::size_t a, std::size_t b) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < N.n; ++c)
    if (N.at(a, b, c) == 1) out.push_back(c);
  return out;
}

// Worst-residual accumulator; keeps the witness of the largest deviation.
struct Worst {
  double r = 0.0;
  std::vector<std::string> wit;
  template <typename MakeWitness>
  void update(double v, MakeWitness&& mk) {
    if (v > r) {
      r = v;
      wit = mk();
    }
  }
};

std::string slot(const ModularData& md, const char* name, std::size_t a) {
  return std::string(name) + "=" + md.labels[a];
}

std::vector<std::string> key6_witness(const ModularData& md, const char* const (&names)[6],
                                      const Key6& k) {
  std::vector<std::string> w;
  for (int i = 0; i < 6; ++i) w.push_back(slot(md, names[i], k[i]));
  return w;
}

Check base_check(std::string name, double tol, bool mandatory = true) {
  Check c;
  c.name = std::move(name);
  c.mandatory = mandatory;
  c.tolerance = tol;
  return c;
}

void finish(Check& c, const Worst& w) {
  c.max_residual = w.r;
  if (c.witness.empty()) c.witness = w.wit;
  c.pass = c.pass && w.r < c.tolerance;
}

// Stored F value for an admissible key; 0 for inadmissible keys (pentagon
// sums run over a free z index). Throws MissingEntry when an admissible key
// is absent from the document.
cplx f0(const FBContext& ctx, const Key6& k) {
  if (!f_admissible(ctx.N, k)) return 0.0;
  return fb_get(ctx.fb.F, k, "F");
}

// Inverts a stored F-block; flags singular blocks instead of throwing so a
// check can report them as its own failure.
bool invert(const Mat& M, Mat& out) {
  Eigen::FullPivLU<Mat> lu(M);
  if (!lu.isInvertible()) return false;
  out = lu.inverse();
  return true;
}

std::string block_desc(const ModularData& md, std::size_t a1, std::size_t a2,
                       std::size_t a3, std::size_t a4) {
  return "(" + md.labels[a1] + "," + md.labels[a2] + "," + md.labels[a3] + ";" +
         md.labels[a4] + ")";
}

}  // namespace

FBlock f_block(const FBContext& ctx, std::size_t a1, std::size_t a2,
               std::size_t a3, std::size_t a4) {
  FBlock b;
  for (std::size_t a5 : channels(ctx.N, a2, a3))
    if (ctx.N.at(a1, a5, a4) == 1) b.rows.push_back(a5);
  for (std::size_t a6 : channels(ctx.N, a1, a2))
    if (ctx.N.at(a6, a3, a4) == 1) b.cols.push_back(a6);
  if (b.rows.size() != b.cols.size())
    throw Error(Errc::FusionInvariant,
                "non-square F-block " + block_desc(ctx.md, a1, a2, a3, a4));
  b.M.resize(static_cast<long>(b.rows.size()), static_cast<long>(b.cols.size()));
  for (std::size_t i = 0; i < b.rows.size(); ++i)
    for (std::size_t j = 0; j < b.cols.size(); ++j)
      b.M(static_cast<long>(i), static_cast<long>(j)) =
          fb_get(ctx.fb.F, Key6{a1, a2, a3, a4, b.rows[i], b.cols[j]}, "F");
  return b;
}

cplx exchange_phase(const FBContext& ctx, int r, std::size_t a, std::size_t b,
                    std::size_t c) {
  Rational delta = ctx.md.h[c] - ctx.md.h[a] - ctx.md.h[b];
  return unit_phase(delta * Rational(2 * r + 1, 2)) *
         fb_get(ctx.fb.sigma12, Key3{a, b, c}, "sigma12");
}

cplx rigidity_scalar(const FBContext& ctx, std::size_t a) {
  std::size_t e = ctx.md.vacuum;
  return fb_get(ctx.fb.F, Key6{a, ctx.md.dual[a], a, a, e, e}, "F");
}

Mat trace_matrix(const FBContext& ctx) {
  std::size_t n = ctx.md.size(), e = ctx.md.vacuum;
  std::vector<cplx> rig(n);
  for (std::size_t a = 0; a < n; ++a) {
    rig[a] = rigidity_scalar(ctx, a);
    if (std::abs(rig[a]) < 1e-12)
      throw Error(Errc::ZeroRigidityScalar,
                  "rigidity scalar of " + ctx.md.labels[a] + " vanishes");
  }
  Mat T(n, n);
  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t a2 = 0; a2 < n; ++a2)
      T(static_cast<long>(a1), static_cast<long>(a2)) =
          fb_get(ctx.fb.B2, Key6{a2, ctx.md.dual[a1], a1, a2, e, e}, "B2") /
          (rig[a1] * rig[a2]);
  return T;
}

Check check_fb_structural(const FBContext& ctx, double tol) {
  Check c = base_check("fb_structural", tol);
  c.pass = true;
  const FusionTensor& N = ctx.N;
  const std::size_t n = N.n, e = ctx.md.vacuum;
  Worst w;
  std::ostringstream notes;

  if (!N.multiplicity_free()) {
    c.pass = false;
    notes << errc_name(Errc::NotMultiplicityFree) << "; ";
  }

  auto keyset_fail = [&](const std::string& what, const std::vector<std::string>& wit) {
    c.pass = false;
    if (c.witness.empty()) c.witness = wit;
    notes << what << "; ";
  };

  // F: stored keys admissible, admissible keys stored, vacuum pins.
  static const char* const fslots[6] = {"a1", "a2", "a3", "a4", "a5", "a6"};
  std::size_t admissible_f = 0;
  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t a2 = 0; a2 < n; ++a2)
      for (std::size_t a3 = 0; a3 < n; ++a3)
        for (std::size_t a4 = 0; a4 < n; ++a4)
          for (std::size_t a5 = 0; a5 < n; ++a5)
            for (std::size_t a6 = 0; a6 < n; ++a6) {
              Key6 k{a1, a2, a3, a4, a5, a6};
              if (!f_admissible(N, k)) continue;
              ++admissible_f;
              auto it = ctx.fb.F.find(k);
              if (it == ctx.fb.F.end()) {
                keyset_fail("F incomplete", key6_witness(ctx.md, fslots, k));
                continue;
              }
              if (a1 == e || a2 == e || a3 == e)
                w.update(std::abs(it->second - cplx(1.0)),
                         [&] { return key6_witness(ctx.md, fslots, k); });
            }
  if (ctx.fb.F.size() != admissible_f)
    for (const auto& [k, v] : ctx.fb.F)
      if (!f_admissible(N, k))
        keyset_fail("inadmissible F key", key6_witness(ctx.md, fslots, k));

  // B (both windings) and B2 key sets.
  std::size_t admissible_b = 0, admissible_b2 = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t d = 0; d < n; ++d)
          for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
              Key6 k{x, y, z, d, p, q};
              if (b_admissible(N, k)) {
                ++admissible_b;
                for (int r : {0, -1})
                  if (!ctx.fb.B.count({r, k}))
                    keyset_fail("B incomplete", key6_witness(ctx.md, fslots, k));
              }
              if (b2_admissible(N, k)) {
                ++admissible_b2;
                if (!ctx.fb.B2.count(k))
                  keyset_fail("B2 incomplete", key6_witness(ctx.md, fslots, k));
              }
            }
  if (ctx.fb.B.size() != 2 * admissible_b)
    for (const auto& [rk, v] : ctx.fb.B) {
      if (rk.first != 0 && rk.first != -1)
        keyset_fail("B winding outside {0,-1}", key6_witness(ctx.md, fslots, rk.second));
      else if (!b_admissible(N, rk.second))
        keyset_fail("inadmissible B key", key6_witness(ctx.md, fslots, rk.second));
    }
  if (ctx.fb.B2.size() != admissible_b2)
    for (const auto& [k, v] : ctx.fb.B2)
      if (!b2_admissible(N, k))
        keyset_fail("inadmissible B2 key", key6_witness(ctx.md, fslots, k));

  // sigma key sets, pins, involutions, braid relation.
  auto sigma_sets = [&](const std::map<Key3, cplx>& m, const char* what) {
    std::size_t admissible = 0;
    for (std::size_t a1 = 0; a1 < n; ++a1)
      for (std::size_t a2 = 0; a2 < n; ++a2)
        for (std::size_t a3 = 0; a3 < n; ++a3)
          if (N.at(a1, a2, a3) == 1) {
            ++admissible;
            if (!m.count(Key3{a1, a2, a3}))
              keyset_fail(std::string(what) + " incomplete",
                          {slot(ctx.md, "a1", a1), slot(ctx.md, "a2", a2),
                           slot(ctx.md, "a3", a3)});
          }
    if (m.size() != admissible)
      for (const auto& [k, v] : m)
        if (!triple_admissible(N, k))
          keyset_fail(std::string(what) + " inadmissible key",
                      {slot(ctx.md, "a1", k[0]), slot(ctx.md, "a2", k[1]),
                       slot(ctx.md, "a3", k[2])});
  };
  sigma_sets(ctx.fb.sigma12, "sigma12");
  sigma_sets(ctx.fb.sigma23, "sigma23");

  if (c.pass) {
    auto s12 = [&](std::size_t a, std::size_t b, std::size_t cc) {
      return fb_get(ctx.fb.sigma12, Key3{a, b, cc}, "sigma12");
    };
    auto s23 = [&](std::size_t a, std::size_t b, std::size_t cc) {
      return fb_get(ctx.fb.sigma23, Key3{a, b, cc}, "sigma23");
    };
    auto wit3 = [&](const char* what, std::size_t a1, std::size_t a2, std::size_t a3) {
      return std::vector<std::string>{std::string("relation=") + what,
                                      slot(ctx.md, "a1", a1), slot(ctx.md, "a2", a2),
                                      slot(ctx.md, "a3", a3)};
    };
    for (std::size_t a1 = 0; a1 < n; ++a1)
      for (std::size_t a2 = 0; a2 < n; ++a2)
        for (std::size_t a3 = 0; a3 < n; ++a3) {
          if (N.at(a1, a2, a3) != 1) continue;
          std::size_t d1 = ctx.md.dual[a1], d2 = ctx.md.dual[a2], d3 = ctx.md.dual[a3];
          // pins
          if (a1 == e || a2 == e)
            w.update(std::abs(s12(a1, a2, a3) - cplx(1.0)),
                     [&] { return wit3("sigma12 pin", a1, a2, a3); });
          if (a3 == e && a2 == d1 && a1 != d1)
            w.update(std::abs(s12(a1, a2, a3) - cplx(1.0)),
                     [&] { return wit3("sigma12 pin", a1, a2, a3); });
          if (a2 == e || a3 == e || a1 == e)
            w.update(std::abs(s23(a1, a2, a3) - cplx(1.0)),
                     [&] { return wit3("sigma23 pin", a1, a2, a3); });
          // involutions
          w.update(std::abs(s12(a1, a2, a3) * s12(a2, a1, a3) - cplx(1.0)),
                   [&] { return wit3("sigma12 involution", a1, a2, a3); });
          w.update(std::abs(s23(a1, a2, a3) * s23(a1, d3, d2) - cplx(1.0)),
                   [&] { return wit3("sigma23 involution", a1, a2, a3); });
          // braid relation
          cplx lhs = s12(a1, a2, a3) * s23(a2, a1, a3) * s12(a2, d3, d1);
          cplx rhs = s23(a1, a2, a3) * s12(a1, d3, d2) * s23(d3, a1, d2);
          w.update(std::abs(lhs - rhs), [&] { return wit3("braid", a1, a2, a3); });
        }
  }

  c.notes = notes.str();
  finish(c, w);
  return c;
}

Check check_fb_pentagon(const FBContext& ctx, double tol) {
  Check c = base_check("fb_pentagon", tol);
  c.pass = true;
  const FusionTensor& N = ctx.N;
  const std::size_t n = N.n;
  Worst w;
  std::size_t equations = 0;
  for (std::size_t o1 = 0; o1 < n; ++o1)
    for (std::size_t o2 = 0; o2 < n; ++o2)
      for (std::size_t o3 = 0; o3 < n; ++o3)
        for (std::size_t o4 = 0; o4 < n; ++o4)
          for (std::size_t T = 0; T < n; ++T)
            for (std::size_t x : channels(N, o3, o4))
              for (std::size_t y = 0; y < n; ++y) {
                if (N.at(o2, x, y) != 1 || N.at(o1, y, T) != 1) continue;
                for (std::size_t u : channels(N, o1, o2))
                  for (std::size_t wch = 0; wch < n; ++wch) {
                    if (N.at(u, o3, wch) != 1 || N.at(wch, o4, T) != 1) continue;
                    cplx lhs = 0.0;
                    for (std::size_t z = 0; z < n; ++z)
                      lhs += f0(ctx, Key6{o2, o3, o4, y, x, z}) *
                             f0(ctx, Key6{o1, z, o4, T, y, wch}) *
                             f0(ctx, Key6{o1, o2, o3, wch, z, u});
                    cplx rhs = f0(ctx, Key6{o1, o2, x, T, y, u}) *
                               f0(ctx, Key6{u, o3, o4, T, x, wch});
                    ++equations;
                    w.update(std::abs(lhs - rhs), [&] {
                      return std::vector<std::string>{
                          slot(ctx.md, "o1", o1), slot(ctx.md, "o2", o2),
                          slot(ctx.md, "o3", o3), slot(ctx.md, "o4", o4),
                          slot(ctx.md, "total", T), slot(ctx.md, "x", x),
                          slot(ctx.md, "y", y), slot(ctx.md, "u", u),
                          slot(ctx.md, "w", wch)};
                    });
                  }
              }
  c.notes = "equations=" + std::to_string(equations);
  finish(c, w);
  return c;
}

Check check_fb_hexagon(const FBContext& ctx, double tol) {
  Check c = base_check("fb_hexagon", tol);
  c.pass = true;
  const FusionTensor& N = ctx.N;
  const std::size_t n = N.n;
  Worst w;
  std::ostringstream notes;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t d = 0; d < n; ++d) {
          FBlock fxyz = f_block(ctx, x, y, z, d);
          if (fxyz.rows.empty()) continue;
          FBlock fyxz = f_block(ctx, y, x, z, d);
          FBlock fyzx = f_block(ctx, y, z, x, d);
          Mat fyxz_inv;
          if (!invert(fyxz.M, fyxz_inv)) {
            c.pass = false;
            notes << "singular F-block " << block_desc(ctx.md, y, x, z, d) << "; ";
            continue;
          }
          for (int r : {0, -1}) {
            Mat diag_g = Mat::Zero(static_cast<long>(fxyz.cols.size()),
                                   static_cast<long>(fxyz.cols.size()));
            for (std::size_t j = 0; j < fxyz.cols.size(); ++j)
              diag_g(static_cast<long>(j), static_cast<long>(j)) =
                  exchange_phase(ctx, r, x, y, fxyz.cols[j]);
            Mat b_comp = fxyz.M * diag_g * fyxz_inv;
            // stored B vs composite
            for (std::size_t i = 0; i < fxyz.rows.size(); ++i)
              for (std::size_t j = 0; j < fyxz.rows.size(); ++j) {
                Key6 k{x, y, z, d, fxyz.rows[i], fyxz.rows[j]};
                auto it = ctx.fb.B.find({r, k});
                if (it == ctx.fb.B.end())
                  throw Error(Errc::MissingEntry, "B entry absent for hexagon");
                w.update(std::abs(b_comp(static_cast<long>(i), static_cast<long>(j)) -
                                  it->second),
                         [&] {
                           auto v = key6_witness(
                               ctx.md, {"x", "y", "z", "d", "p", "q"}, k);
                           v.insert(v.begin(), "part=stored-B r=" + std::to_string(r));
                           return v;
                         });
              }
            // genuine hexagon: B_r(x,y,z;d) . diag_u(rho_r(x,z;u)) . F(y,z,x;d)
            // equals diag_p(rho_r(x,p;d)).
            Mat diag_u = Mat::Zero(static_cast<long>(fyzx.rows.size()),
                                   static_cast<long>(fyzx.rows.size()));
            for (std::size_t j = 0; j < fyzx.rows.size(); ++j)
              diag_u(static_cast<long>(j), static_cast<long>(j)) =
                  exchange_phase(ctx, r, x, z, fyzx.rows[j]);
            Mat H = b_comp * diag_u * fyzx.M;
            for (std::size_t i = 0; i < fxyz.rows.size(); ++i)
              for (std::size_t j = 0; j < fyzx.cols.size(); ++j) {
                cplx want = (fxyz.rows[i] == fyzx.cols[j])
                                ? exchange_phase(ctx, r, x, fxyz.rows[i], d)
                                : cplx(0.0);
                w.update(std::abs(H(static_cast<long>(i), static_cast<long>(j)) - want),
                         [&] {
                           return std::vector<std::string>{
                               "part=composite r=" + std::to_string(r),
                               slot(ctx.md, "x", x), slot(ctx.md, "y", y),
                               slot(ctx.md, "z", z), slot(ctx.md, "d", d),
                               slot(ctx.md, "p", fxyz.rows[i]),
                               slot(ctx.md, "p2", fyzx.cols[j])};
                         });
              }
          }
        }
  c.notes = notes.str();
  finish(c, w);
  return c;
}

Check check_fb_b2_composite(const FBContext& ctx, double tol) {
  Check c = base_check("fb_b2_composite", tol);
  c.pass = true;
  const FusionTensor& N = ctx.N;
  const std::size_t n = N.n;
  Worst w;
  std::ostringstream notes;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t d = 0; d < n; ++d) {
          FBlock fxyz = f_block(ctx, x, y, z, d);
          if (fxyz.rows.empty()) continue;
          Mat finv;
          if (!invert(fxyz.M, finv)) {
            c.pass = false;
            notes << "singular F-block " << block_desc(ctx.md, x, y, z, d) << "; ";
            continue;
          }
          Mat diag = Mat::Zero(static_cast<long>(fxyz.cols.size()),
                               static_cast<long>(fxyz.cols.size()));
          for (std::size_t j = 0; j < fxyz.cols.size(); ++j) {
            Rational delta = ctx.md.h[fxyz.cols[j]] - ctx.md.h[x] - ctx.md.h[y];
            diag(static_cast<long>(j), static_cast<long>(j)) = unit_phase(-delta);
          }
          Mat b2c = fxyz.M * diag * finv;
          for (std::size_t i = 0; i < fxyz.rows.size(); ++i)
            for (std::size_t j = 0; j < fxyz.rows.size(); ++j) {
              Key6 k{x, y, z, d, fxyz.rows[i], fxyz.rows[j]};
              w.update(std::abs(b2c(static_cast<long>(i), static_cast<long>(j)) -
                                fb_get(ctx.fb.B2, k, "B2")),
                       [&] {
                         return key6_witness(ctx.md, {"x", "y", "z", "d", "p", "q"}, k);
                       });
            }
        }
  c.notes = notes.str();
  finish(c, w);
  return c;
}

Check check_fb_rigidity(const FBContext& ctx, double tol) {
  Check c = base_check("fb_rigidity", tol);
  c.pass = true;
  Worst w;
  std::ostringstream notes;
  for (std::size_t a = 0; a < ctx.md.size(); ++a) {
    cplx v = rigidity_scalar(ctx, a);
    if (std::abs(v) < 1e-12) {
      c.pass = false;
      notes << errc_name(Errc::ZeroRigidityScalar) << " at " << ctx.md.labels[a] << "; ";
      continue;
    }
    const long e = static_cast<long>(ctx.md.vacuum);
    double da = std::abs(ctx.md.S(e, static_cast<long>(a)) / ctx.md.S(e, e));
    w.update(std::abs(std::abs(v) - 1.0 / da),
             [&] { return std::vector<std::string>{slot(ctx.md, "a", a)}; });
  }
  if (c.pass) notes << "all scalars nonzero";
  c.notes = notes.str();
  finish(c, w);
  return c;
}

Check check_fb_ms_identity(const FBContext& ctx, double tol) {
  Check c = base_check("fb_ms_identity", tol);
  c.pass = true;
  const FusionTensor& N = ctx.N;
  const std::size_t n = N.n, e = ctx.md.vacuum;
  Worst w;
  std::size_t checked = 0, skipped = 0;
  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t a2 = 0; a2 < n; ++a2)
      for (std::size_t a3 = 0; a3 < n; ++a3) {
        std::size_t d1 = ctx.md.dual[a1], d3 = ctx.md.dual[a3];
        Key6 k1{a2, d3, a3, a2, e, d1};
        if (N.at(a1, a2, a3) == 0) {
          // Empty-sum side: the admissibility filter must kill the product.
          ++skipped;
          if (f_admissible(N, k1))
            w.update(1.0, [&] {
              return std::vector<std::string>{"relation=empty-sum",
                                              slot(ctx.md, "a1", a1),
                                              slot(ctx.md, "a2", a2),
                                              slot(ctx.md, "a3", a3)};
            });
          continue;
        }
        ++checked;
        cplx lhs = fb_get(ctx.fb.F, k1, "F") *
                   fb_get(ctx.fb.sigma23, Key3{a2, d3, d1}, "sigma23") *
                   fb_get(ctx.fb.sigma12, Key3{a2, a1, a3}, "sigma12") *
                   fb_get(ctx.fb.F, Key6{d1, a1, a2, a2, a3, e}, "F");
        cplx rhs = rigidity_scalar(ctx, a2);
        w.update(std::abs(lhs - rhs), [&] {
          return std::vector<std::string>{slot(ctx.md, "a1", a1),
                                          slot(ctx.md, "a2", a2),
                                          slot(ctx.md, "a3", a3)};
        });
      }
  c.notes = "triples=" + std::to_string(checked) + " empty=" + std::to_string(skipped);
  finish(c, w);
  return c;
}

Check check_fb_s_form3(const FBContext& ctx, double tol) {
  Check c = base_check("fb_s_form3", tol);
  c.pass = true;
  Worst w;
  Mat T = trace_matrix(ctx);
  const long ve = static_cast<long>(ctx.md.vacuum);
  cplx see = ctx.md.S(ve, ve);
  for (std::size_t a1 = 0; a1 < ctx.md.size(); ++a1)
    for (std::size_t a2 = 0; a2 < ctx.md.size(); ++a2)
      w.update(std::abs(ctx.md.S(static_cast<long>(a1), static_cast<long>(a2)) -
                        see * T(static_cast<long>(a1), static_cast<long>(a2))),
               [&] {
                 return std::vector<std::string>{slot(ctx.md, "a1", a1),
                                                 slot(ctx.md, "a2", a2)};
               });
  finish(c, w);
  return c;
}

Check check_fb_nondegeneracy(const FBContext& ctx, double det_floor) {
  Check c = base_check("fb_nondegeneracy", det_floor);
  Mat T = trace_matrix(ctx);
  c.max_residual = std::abs(T.determinant());
  c.pass = c.max_residual > det_floor;
  c.notes = "value is |det T|; pass requires it above tolerance";
  return c;
}

Check check_fb_diag_eigen(const FBContext& ctx, double tol) {
  Check c = base_check("diagonalization_fb_eigen", tol, /*mandatory=*/false);
  c.pass = true;
  const std::size_t n = ctx.md.size(), e = ctx.md.vacuum;
  Worst w;
  for (std::size_t a2 = 0; a2 < n; ++a2) {
    cplx rig = rigidity_scalar(ctx, a2);
    if (std::abs(rig) < 1e-12) {
      c.pass = false;
      c.notes = errc_name(Errc::ZeroRigidityScalar);
      continue;
    }
    for (std::size_t a4 = 0; a4 < n; ++a4) {
      cplx denom = ctx.md.S(static_cast<long>(e), static_cast<long>(a4));
      if (std::abs(denom) < 1e-300) {
        c.pass = false;
        c.notes = errc_name(Errc::VacuumEntryZero);
        continue;
      }
      cplx lhs = fb_get(ctx.fb.B2, Key6{a4, ctx.md.dual[a2], a2, a4, e, e}, "B2") / rig;
      cplx rhs = ctx.md.S(static_cast<long>(a2), static_cast<long>(a4)) / denom;
      w.update(std::abs(lhs - rhs), [&] {
        return std::vector<std::string>{slot(ctx.md, "a2", a2), slot(ctx.md, "a4", a4)};
      });
    }
  }
  finish(c, w);
  return c;
}

}  // namespace mdv
