#pragma once
#include <stdexcept>
#include <string>

namespace mdv {

enum class Errc {
  DimensionMismatch,
  DuplicateLabel,
  VacuumOutOfRange,
  DualNotInvolution,
  VacuumWeightNonzero,
  SingularS,
  VacuumEntryZero,
  NonIntegral,
  NegativeEntry,
  FusionInvariant,
  NonCommutingFusionMatrices,
  DegenerateSpectrumUnresolved,
  NoConsistentOrdering,
  MissingEntry,
  NotMultiplicityFree,
  ZeroRigidityScalar,
  TauNotInUpperHalfPlane,
  TruncationTooShort,
  InvalidParameters,
  OracleSearchFailed,
  ParseError,
  Overflow,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::VacuumOutOfRange: return "VacuumOutOfRange";
    case Errc::DualNotInvolution: return "DualNotInvolution";
    case Errc::VacuumWeightNonzero: return "VacuumWeightNonzero";
    case Errc::SingularS: return "SingularS";
    case Errc::VacuumEntryZero: return "VacuumEntryZero";
    case Errc::NonIntegral: return "NonIntegral";
    case Errc::NegativeEntry: return "NegativeEntry";
    case Errc::FusionInvariant: return "FusionInvariant";
    case Errc::NonCommutingFusionMatrices: return "NonCommutingFusionMatrices";
    case Errc::DegenerateSpectrumUnresolved: return "DegenerateSpectrumUnresolved";
    case Errc::NoConsistentOrdering: return "NoConsistentOrdering";
    case Errc::MissingEntry: return "MissingEntry";
    case Errc::NotMultiplicityFree: return "NotMultiplicityFree";
    case Errc::ZeroRigidityScalar: return "ZeroRigidityScalar";
    case Errc::TauNotInUpperHalfPlane: return "TauNotInUpperHalfPlane";
    case Errc::TruncationTooShort: return "TruncationTooShort";
    case Errc::InvalidParameters: return "InvalidParameters";
    case Errc::OracleSearchFailed: return "OracleSearchFailed";
    case Errc::ParseError: return "ParseError";
    case Errc::Overflow: return "Overflow";
  }
  return "UnknownErrc";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace mdv
