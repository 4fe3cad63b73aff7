#include "mdv/modular_data.hpp"

#include <unordered_set>

#include "mdv/error.hpp"

namespace mdv {

ModularData ModularData::make(std::vector<std::string> labels, std::size_t vacuum,
                              std::vector<std::size_t> dual, std::vector<Rational> h,
                              Rational c, Mat S) {
  const std::size_t n = labels.size();
  if (n == 0) throw Error(Errc::DimensionMismatch, "empty label set");
  {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels)
      if (!seen.insert(l).second) throw Error(Errc::DuplicateLabel, "label '" + l + "'");
  }
  if (dual.size() != n || h.size() != n)
    throw Error(Errc::DimensionMismatch, "dual/h size vs label count");
  if (static_cast<std::size_t>(S.rows()) != n || static_cast<std::size_t>(S.cols()) != n)
    throw Error(Errc::DimensionMismatch, "S must be n x n");
  if (vacuum >= n) throw Error(Errc::VacuumOutOfRange, "vacuum index " + std::to_string(vacuum));
  for (std::size_t a = 0; a < n; ++a) {
    if (dual[a] >= n || dual[dual[a]] != a)
      throw Error(Errc::DualNotInvolution, "at label '" + labels[a] + "'");
  }
  if (dual[vacuum] != vacuum)
    throw Error(Errc::DualNotInvolution, "vacuum must be self-dual");
  if (!(h[vacuum] == Rational(0)))
    throw Error(Errc::VacuumWeightNonzero, "h(vacuum) = " + h[vacuum].str());

  Eigen::FullPivLU<Mat> lu(S);
  if (!lu.isInvertible())
    throw Error(Errc::SingularS, "S is numerically singular");

  ModularData md;
  md.labels = std::move(labels);
  md.vacuum = vacuum;
  md.dual = std::move(dual);
  md.h = std::move(h);
  md.c = c;
  md.S = std::move(S);
  return md;
}

std::size_t ModularData::index(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return i;
  throw Error(Errc::MissingEntry, "label '" + label + "'");
}

}  // namespace mdv
