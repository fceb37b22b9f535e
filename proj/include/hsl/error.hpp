#pragma once

#include <stdexcept>
#include <string>

namespace hsl {

enum class ErrorCode {
  ZeroQuaternion,
  DegenerateLattice,
  Beta0NotInDualLattice,
  InvalidTorus,
  BranchPoint,
  ZeroLambda,
  ZeroMu,
  EmptyKey,
  AllZeroCoefficients,
  AngleNotAdmissible,
  ZeroTau,
  NotMonochromatic,
  ZeroSection,
  TransformAtInfinity,
  InconsistentProlongation,
  ConfigError,
  IoError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hsl
