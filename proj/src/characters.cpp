#include "mdv/characters.hpp"

#include <cmath>
#include <sstream>

#include "mdv/error.hpp"

namespace mdv {

namespace {

Check base_check(std::string name, double tol, bool mandatory = true) {
  Check c;
  c.name = std::move(name);
  c.mandatory = mandatory;
  c.tolerance = tol;
  c.pass = true;
  return c;
}

std::string tau_str(cplx tau) {
  std::ostringstream os;
  os << tau.real() << (tau.imag() < 0 ? "" : "+") << tau.imag() << "i";
  return os.str();
}

// Evaluates every series at tau; series were validated by the offset gate.
std::vector<cplx> eval_all(const std::vector<CharacterSeries>& chs, cplx tau) {
  std::vector<cplx> v(chs.size());
  for (std::size_t a = 0; a < chs.size(); ++a) v[a] = eval_character(chs[a], tau);
  return v;
}

struct Worst {
  double r = 0.0;
  std::vector<std::string> wit;
};

void track(Worst& w, double v, const std::string& label, cplx tau) {
  if (v > w.r) {
    w.r = v;
    w.wit = {"a=" + label, "tau=" + tau_str(tau)};
  }
}

}  // namespace

cplx eval_character(const CharacterSeries& ch, cplx tau) {
  if (!(tau.imag() > 0.0))
    throw Error(Errc::TauNotInUpperHalfPlane,
                "Im(tau) = " + std::to_string(tau.imag()));
  if (ch.coeffs.empty())
    throw Error(Errc::TruncationTooShort, "series '" + ch.label + "' has no terms");
  const cplx two_pi_i_tau = cplx(0.0, 2.0 * M_PI) * tau;
  const cplx q = std::exp(two_pi_i_tau);
  cplx s = 0.0;
  for (std::size_t k = ch.coeffs.size(); k-- > 0;)
    s = s * q + static_cast<double>(ch.coeffs[k]);
  return std::exp(two_pi_i_tau * ch.offset.value()) * s;
}

double character_tail_estimate(const CharacterSeries& ch, double q_abs) {
  if (ch.coeffs.empty() || q_abs <= 0.0 || q_abs >= 1.0) return 0.0;
  double L = static_cast<double>(ch.coeffs.size() - 1);
  return std::abs(static_cast<double>(ch.coeffs.back())) *
         std::pow(q_abs, ch.offset.value() + L) / (1.0 - q_abs);
}

Check check_character_offset(const ModularData& md,
                             const std::vector<CharacterSeries>& chs) {
  Check c = base_check("character_offset", 0.0);
  c.notes = "exact rational comparison against h_a - c/24";
  auto fail = [&](const std::string& why, const std::string& who) {
    c.pass = false;
    c.max_residual = 1.0;
    if (c.witness.empty()) {
      c.witness = {who};
      c.notes = why;
    }
  };
  if (chs.size() != md.size()) {
    fail("series count " + std::to_string(chs.size()) + " vs " +
             std::to_string(md.size()) + " labels",
         "count");
    return c;
  }
  for (std::size_t a = 0; a < md.size(); ++a) {
    if (chs[a].label != md.labels[a]) {
      fail("series out of label order", "a=" + chs[a].label);
      continue;
    }
    if (chs[a].offset != md.h[a] - md.c / Rational(24))
      fail("offset != h - c/24", "a=" + chs[a].label);
    if (chs[a].coeffs.empty()) fail("empty coefficient list", "a=" + chs[a].label);
  }
  return c;
}

Check check_character_s_transform(const ModularData& md,
                                  const std::vector<CharacterSeries>& chs,
                                  const std::vector<cplx>& taus, double tol) {
  Check c = base_check("character_s_transform", tol);
  Worst w;
  double tail = 0.0;
  for (cplx tau : taus) {
    const cplx stau = -1.0 / tau;
    std::vector<cplx> at_tau = eval_all(chs, tau);
    for (std::size_t a = 0; a < chs.size(); ++a) {
      cplx lhs = eval_character(chs[a], stau);
      cplx rhs = 0.0;
      for (std::size_t b = 0; b < chs.size(); ++b)
        rhs += md.S(static_cast<long>(a), static_cast<long>(b)) * at_tau[b];
      track(w, std::abs(lhs - rhs), chs[a].label, tau);
      tail = std::max(tail, character_tail_estimate(
                                chs[a], std::exp(-2.0 * M_PI * stau.imag())));
      tail = std::max(tail, character_tail_estimate(
                                chs[a], std::exp(-2.0 * M_PI * tau.imag())));
    }
  }
  c.max_residual = w.r;
  c.witness = w.wit;
  c.pass = w.r < tol;
  std::ostringstream os;
  os << "sample points: " << taus.size() << "; worst geometric tail estimate " << tail;
  c.notes = os.str();
  return c;
}

Check check_character_t_transform(const ModularData& md,
                                  const std::vector<CharacterSeries>& chs,
                                  const std::vector<cplx>& taus, double tol) {
  Check c = base_check("character_t_transform", tol, /*mandatory=*/false);
  (void)md;
  Worst w;
  for (cplx tau : taus)
    for (const auto& ch : chs) {
      cplx lhs = eval_character(ch, tau + 1.0);
      cplx rhs = unit_phase(ch.offset) * eval_character(ch, tau);
      track(w, std::abs(lhs - rhs), ch.label, tau);
    }
  c.max_residual = w.r;
  c.witness = w.wit;
  c.pass = w.r < tol;
  c.notes = "exact identity of truncated sums; probes offset phases only";
  return c;
}

Check check_character_s_squared(const ModularData& md,
                                const std::vector<CharacterSeries>& chs,
                                const std::vector<cplx>& taus, double tol) {
  Check c = base_check("character_s_squared", tol, /*mandatory=*/false);
  Worst w;
  const std::size_t n = chs.size();
  for (cplx tau : taus) {
    std::vector<cplx> v = eval_all(chs, tau);
    Eigen::VectorXcd vv(n);
    for (std::size_t a = 0; a < n; ++a) vv(static_cast<long>(a)) = v[a];
    Eigen::VectorXcd uu = md.S * (md.S * vv);
    for (std::size_t a = 0; a < n; ++a)
      track(w, std::abs(uu(static_cast<long>(a)) - v[md.dual[a]]), chs[a].label, tau);
  }
  c.max_residual = w.r;
  c.witness = w.wit;
  c.pass = w.r < tol;
  c.notes = "S^2 applied to evaluated characters vs charge conjugation";
  return c;
}

}  // namespace mdv
