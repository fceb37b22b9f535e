#pragma once

#include <vector>

#include "hsl/lattice.hpp"
#include "hsl/quaternion.hpp"

namespace hsl {

/// (A, B) with B reduced mod Γ*, plus Γ*_{A,B} and λ_δ per frequency.
struct MultiplierKey {
  Cx A, B;
  std::vector<Cx> freqs;
  std::vector<Cx> lambdas;
};

struct DoublePoint {
  Cx zeta;
  Cx A;
  Cx B;  // (β0 − ζ)/2 mod Γ*
};

struct SpectralPoint {
  Cx mu;
  Cx sqrt_mu;  // principal branch
  Cx lambda;   // 1/√μ, so μλ² = 1
  Cx A_mu, C_mu;

  Cx a() const { return 0.5 * (mu + 1.0 / mu); }
  Cx b() const { return 0.5 * (1.0 / mu - mu) * Cx(0.0, 1.0); }
};

/// h^{A,B}_γ = exp(2π(<A,γ> − i<B,γ>)).
Cx multiplier_value(Cx A, Cx B, Cx gamma);

inline int dim_H0(const MultiplierKey& key) { return static_cast<int>(key.freqs.size()); }

/// λ_δ = (2/β0)(δ − iA − B).
inline Cx lambda_of(Cx beta0, Cx A, Cx B, Cx delta) { return 2.0 / beta0 * (delta - Cx(0.0, 1.0) * A - B); }

/// |A| below this counts as A = 0.
inline constexpr double kZeroA = 1e-12;

/// Spectral data attached to (Γ, β0).
class Spectrum {
 public:
  /// Throws Beta0NotInDualLattice.
  Spectrum(const Lattice& lattice, Cx beta0);

  const Lattice& lattice() const { return lattice_; }
  const DualLattice& dual() const { return dual_; }
  Cx beta0() const { return beta0_; }

  /// Γ*_{A,B}: circle around B when A = 0, else the two candidates B ± i r A/|A|.
  MultiplierKey admissible(Cx A, Cx B) const;
  /// Key with prescribed frequencies (B reduced, frequencies shifted along).
  MultiplierKey make_key(Cx A, Cx B, const std::vector<Cx>& freqs) const;

  std::vector<DoublePoint> double_points(double max_norm) const;

  /// ρ(A, B) = (A, −B); frequencies map to −δ.
  MultiplierKey real_structure(const MultiplierKey& key) const;
  bool is_real(const MultiplierKey& key) const;

  /// Normalization map λ ↦ (A_λ, B_λ). Throws ZeroLambda.
  MultiplierKey eta(Cx lambda) const;

  /// μ-dictionary; throws ZeroMu.
  SpectralPoint mu_point(Cx mu) const;
  bool degenerate_monodromy(Cx mu) const;

  /// Same multiplier on Γ: A equal and B congruent mod Γ*.
  bool same_multiplier(Cx A1, Cx B1, Cx A2, Cx B2, double tol = 1e-9) const;

  /// |δ−B|² − |A|² − |β0|²/4 and <δ−B, A>.
  std::pair<double, double> ab_residual(Cx A, Cx B, Cx delta) const;

 private:
  Lattice lattice_;
  DualLattice dual_;
  Cx beta0_;
};

/// The circle B = β0/2 (1 + e^{it}) used in B-sweeps.
inline Cx circle_B(Cx beta0, double t) { return 0.5 * beta0 * (1.0 + std::polar(1.0, t)); }

}  // namespace hsl
