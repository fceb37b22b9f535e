#include "hsl/quaternion.hpp"

#include "hsl/error.hpp"

namespace hsl {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroQuaternion: return "ZeroQuaternion";
    case ErrorCode::DegenerateLattice: return "DegenerateLattice";
    case ErrorCode::Beta0NotInDualLattice: return "Beta0NotInDualLattice";
    case ErrorCode::InvalidTorus: return "InvalidTorus";
    case ErrorCode::BranchPoint: return "BranchPoint";
    case ErrorCode::ZeroLambda: return "ZeroLambda";
    case ErrorCode::ZeroMu: return "ZeroMu";
    case ErrorCode::EmptyKey: return "EmptyKey";
    case ErrorCode::AllZeroCoefficients: return "AllZeroCoefficients";
    case ErrorCode::AngleNotAdmissible: return "AngleNotAdmissible";
    case ErrorCode::ZeroTau: return "ZeroTau";
    case ErrorCode::NotMonochromatic: return "NotMonochromatic";
    case ErrorCode::ZeroSection: return "ZeroSection";
    case ErrorCode::TransformAtInfinity: return "TransformAtInfinity";
    case ErrorCode::InconsistentProlongation: return "InconsistentProlongation";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Quaternion qinv(const Quaternion& a) {
  const double n2 = a.norm2();
  if (n2 == 0.0) throw Error(ErrorCode::ZeroQuaternion, "inverse of zero quaternion");
  return {a.w / n2, -a.x / n2, -a.y / n2, -a.z / n2};
}

Quaternion gauge_exp(double beta) { return j_exp(0.5 * beta); }

}  // namespace hsl
