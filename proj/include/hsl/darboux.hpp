#pragma once

#include <optional>
#include <vector>

#include "hsl/spectral.hpp"
#include "hsl/torus.hpp"

namespace hsl {

struct SectionTerm {
  Cx delta;
  Cx u;       // ũ_δ
  Cx lambda;  // λ_δ
};

/// α(z) = e^{jβ/2} [Σ (1 − kλ_δ) ũ_δ e_{δ−B}(z)] e^{2π<A,z>}.
class HoloSection {
 public:
  HoloSection(Cx beta0, Cx A, Cx B, std::vector<SectionTerm> terms)
      : beta0_(beta0), A_(A), B_(B), terms_(std::move(terms)) {}

  Cx beta0() const { return beta0_; }
  Cx A() const { return A_; }
  Cx B() const { return B_; }
  const std::vector<SectionTerm>& terms() const { return terms_; }

  Quaternion value(Cx z) const;
  Quaternion dx(Cx z) const;
  Quaternion dy(Cx z) const;

 private:
  Quaternion partial(Cx z, int dir) const;

  Cx beta0_, A_, B_;
  std::vector<SectionTerm> terms_;
};

/// Throws EmptyKey, AllZeroCoefficients (and ConfigError on a size mismatch).
HoloSection build_section(const MultiplierKey& key, Cx beta0, const std::vector<Cx>& coeffs);

enum class DarbouxKind { Monochromatic, Polychromatic, PointAtInfinity };

const char* to_string(DarbouxKind kind);

struct PolyWeight {
  double t;  // angle in I_B
  Cx u;
};

/// f̂ = f + e^{jβ/2} τ g.
class DarbouxSurface {
 public:
  static DarbouxSurface constant_tau(const HslTorus& base, Quaternion tau);
  static DarbouxSurface polychromatic(const HslTorus& base, Cx B, std::vector<PolyWeight> weights);
  static DarbouxSurface at_infinity(const HslTorus& base);

  DarbouxKind kind() const { return kind_; }
  const HslTorus& base() const { return base_; }
  bool singular() const { return singular_; }
  double min_abs_r() const { return min_r_; }
  double max_abs_r() const { return max_r_; }
  const std::vector<PolyWeight>& weights() const { return weights_; }

  /// Throws TransformAtInfinity for the constant map ∞.
  Quaternion tau(Cx z) const;
  Quaternion position(Cx z) const;

  /// Polychromatic pieces: τ = S/(r π conj(β0)).
  Quaternion numerator(Cx z) const;
  double r(Cx z) const;

 private:
  explicit DarbouxSurface(const HslTorus& base) : base_(base) {}

  HslTorus base_;
  DarbouxKind kind_ = DarbouxKind::PointAtInfinity;
  Quaternion tau_const_;
  Cx B_;
  std::vector<PolyWeight> weights_;
  bool singular_ = false;
  double min_r_ = 0.0, max_r_ = 0.0;
};

/// Closed-form monochromatic transform for frequency index `which` of the key.
DarbouxSurface darboux_mono(const HslTorus& t, const MultiplierKey& key, std::size_t which = 0);

/// Throws AngleNotAdmissible when B − (β0/2)e^{it} ∉ Γ* + β0/2.
DarbouxSurface darboux_poly(const HslTorus& t, Cx B, const std::vector<PolyWeight>& weights);

/// Angles of I_B, i.e. t with B − (β0/2)e^{it} ∈ Γ* + β0/2, sorted in [0, 2π).
std::vector<double> admissible_angles(const Spectrum& spec, Cx B);

/// N̂ = −T R T^{-1} = e^{jβ/2} τ i τ^{-1} e^{−jβ/2}. Throws ZeroTau.
Quaternion dt_left_normal(const DarbouxSurface& d, Cx z);

struct LagrangianReport {
  bool lagrangian = false;
  double max_violation = 0.0;  // max |Im(conj τ0 τ1)|/(|τ0|²+|τ1|²)
  Cx worst_point;
};

LagrangianReport is_lagrangian(const DarbouxSurface& d, int grid_n = 32);

struct AngleShift {
  double beta_h = 0.0;
  double stddev = 0.0;  // of the per-point shift over the grid
  double offset = 0.0;  // mean gap between per-point and closed-form shift
};

/// Throws NotMonochromatic.
AngleShift lagrangian_angle_shift(const DarbouxSurface& d, int grid_n = 32);

/// β_h from τ = (τ0 + jτ1)c with τ0, τ1 real. Throws NotMonochromatic if not factorable.
double angle_shift_of_tau(Quaternion tau);

struct MuSections {
  SpectralPoint point;
  MultiplierKey key_plus, key_minus;
  HoloSection alpha_plus, alpha_minus;
};

MuSections mu_sections(const HslTorus& t, Cx mu);

/// T = T̂^{-1}, T̂ = −fx^{-1} ∂xα α^{-1}; throws ZeroSection, BranchPoint,
/// TransformAtInfinity, InconsistentProlongation.
Quaternion prolongation_T(const HoloSection& s, const HslTorus& t, Cx z);

/// Grid point ((i+½)/n) ω1 + ((j+½)/n) ω2.
inline Cx cell_center(const Lattice& l, int n, int i, int j) {
  return (i + 0.5) / n * l.omega1 + (j + 0.5) / n * l.omega2;
}

}  // namespace hsl
