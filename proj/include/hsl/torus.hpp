#pragma once

#include <vector>

#include "hsl/lattice.hpp"
#include "hsl/quaternion.hpp"

namespace hsl {

struct FourierTerm {
  Cx delta;      // frequency in Γ*_{β0,+}
  Quaternion c;  // coefficient c_δ
};

/// f, its partials and the derived frames at one point.
struct SurfaceJet {
  Quaternion f, fx, fy;
  Quaternion g;  // fx = e^{jβ/2} g
  double beta = 0.0;
  Quaternion N, R, H;
};

/// Γ*_{β0} = {δ ∈ Γ* + β0/2 : |δ| = |β0|/2, δ ≠ ±β0/2}; with positive_half only
/// Im(δ/β0) > 0. Throws Beta0NotInDualLattice.
std::vector<Cx> admissible_freqs_beta0(const Lattice& lattice, Cx beta0, bool positive_half = false);

/// Same circle without the exclusion of ±β0/2 (this is Γ*_{0,0}).
std::vector<Cx> circle_freqs_beta0(const Lattice& lattice, Cx beta0);

class HslTorus {
 public:
  /// Validates β0 ∈ Γ*, β0 ≠ 0, every δ ∈ Γ*_{β0,+}, some c ≠ 0.
  static HslTorus create(const Lattice& lattice, Cx beta0, std::vector<FourierTerm> coeffs);
  /// No admissibility checks; only for probing the identities with broken data.
  static HslTorus from_raw(const Lattice& lattice, Cx beta0, std::vector<FourierTerm> coeffs);

  const Lattice& lattice() const { return lattice_; }
  const DualLattice& dual() const { return dual_; }
  Cx beta0() const { return beta0_; }
  const std::vector<FourierTerm>& coeffs() const { return coeffs_; }

  /// β(z) = 2π<β0, z>.
  double beta(Cx z) const { return 2.0 * M_PI * pairing(beta0_, z); }
  Quaternion position(Cx z) const;
  /// Throws BranchPoint where |g| < 1e-12.
  SurfaceJet jet(Cx z) const;

 private:
  HslTorus(const Lattice& l, Cx b, std::vector<FourierTerm> c);

  Lattice lattice_;
  DualLattice dual_;
  Cx beta0_;
  std::vector<FourierTerm> coeffs_;
};

/// Γ = (1/r1)Z ⊕ (i/r2)Z, β0 = r1 − r2 i; reproduces (1/r1)e^{2πj r1 x} + i(1/r2)e^{2πj r2 y}.
HslTorus homogeneous_torus(double r1, double r2);

/// Reference formula of the homogeneous torus, evaluated directly.
Quaternion homogeneous_position(double r1, double r2, Cx z);

}  // namespace hsl
