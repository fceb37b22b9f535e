#include "hsl/spectral.hpp"

#include <cmath>

#include "hsl/error.hpp"

namespace hsl {

namespace {
constexpr Cx kIc{0.0, 1.0};
}

Cx multiplier_value(Cx A, Cx B, Cx gamma) {
  return std::exp(2.0 * M_PI * Cx(pairing(A, gamma), -pairing(B, gamma)));
}

Spectrum::Spectrum(const Lattice& lattice, Cx beta0)
    : lattice_(lattice), dual_(dual_basis(lattice)), beta0_(beta0) {
  if (std::abs(beta0) == 0.0 || !is_dual_point(dual_, beta0)) {
    throw Error(ErrorCode::Beta0NotInDualLattice, "beta0 must be a nonzero point of the dual lattice");
  }
}

MultiplierKey Spectrum::make_key(Cx A, Cx B, const std::vector<Cx>& freqs) const {
  MultiplierKey key;
  key.A = A;
  key.B = reduce_mod_dual(dual_, B);
  const Cx shift = key.B - B;
  for (Cx d : freqs) {
    key.freqs.push_back(d + shift);
    key.lambdas.push_back(lambda_of(beta0_, A, key.B, d + shift));
  }
  return key;
}

MultiplierKey Spectrum::admissible(Cx A, Cx B) const {
  const Cx Br = reduce_mod_dual(dual_, B);
  const Cx half = 0.5 * beta0_;
  std::vector<Cx> freqs;
  if (std::abs(A) < kZeroA) {
    freqs = enum_translated_circle(dual_, half, Br, std::abs(half), 1e-9 / (1.0 + std::abs(beta0_)));
    A = Cx(0.0, 0.0);
  } else {
    const double r = std::sqrt(std::norm(A) + std::norm(half));
    const Cx step = kIc * r * A / std::abs(A);
    for (Cx d : {Br - step, Br + step}) {
      if (is_dual_point(dual_, d - half)) freqs.push_back(d);
    }
    sort_lex(freqs);
  }
  return make_key(A, Br, freqs);
}

std::vector<DoublePoint> Spectrum::double_points(double max_norm) const {
  const double nb = std::abs(beta0_);
  std::vector<DoublePoint> out;
  for (Cx zeta : enum_translated_disk(dual_, Cx(0.0, 0.0), Cx(0.0, 0.0), max_norm)) {
    const double nz = std::abs(zeta);
    if (nz <= nb + 1e-12 || nz > max_norm) continue;
    const Cx A = -0.5 * kIc * zeta * std::sqrt(1.0 - nb * nb / (nz * nz));
    const Cx B = reduce_mod_dual(dual_, 0.5 * (beta0_ - zeta));
    out.push_back({zeta, A, B});
  }
  return out;
}

MultiplierKey Spectrum::real_structure(const MultiplierKey& key) const {
  std::vector<Cx> neg;
  for (Cx d : key.freqs) neg.push_back(-d);
  MultiplierKey out = make_key(key.A, -key.B, neg);
  // keep the ordering deterministic
  std::vector<Cx> f = out.freqs;
  sort_lex(f);
  return make_key(out.A, out.B, f);
}

bool Spectrum::is_real(const MultiplierKey& key) const {
  // h real: B ∈ ½Γ* on the A = 0 branch, whether or not the key is admissible
  if (std::abs(key.A) < kZeroA) return is_dual_point(dual_, 2.0 * key.B);
  return key.freqs.size() == 2;  // double point
}

MultiplierKey Spectrum::eta(Cx lambda) const {
  if (std::abs(lambda) == 0.0) throw Error(ErrorCode::ZeroLambda, "lambda must be nonzero");
  const Cx inv_bar = 1.0 / std::conj(lambda);
  const Cx A = kIc * beta0_ / 4.0 * (lambda - inv_bar);
  const Cx B = beta0_ / 4.0 * (2.0 - lambda - inv_bar);
  return admissible(A, B);
}

SpectralPoint Spectrum::mu_point(Cx mu) const {
  if (std::abs(mu) == 0.0) throw Error(ErrorCode::ZeroMu, "mu must be nonzero");
  SpectralPoint p;
  p.mu = mu;
  p.sqrt_mu = std::sqrt(mu);
  p.lambda = 1.0 / p.sqrt_mu;
  p.A_mu = kIc * beta0_ / 4.0 * (1.0 / p.sqrt_mu - std::conj(p.sqrt_mu));
  p.C_mu = beta0_ / 4.0 * (1.0 / p.sqrt_mu + std::conj(p.sqrt_mu));
  return p;
}

bool Spectrum::degenerate_monodromy(Cx mu) const {
  const SpectralPoint p = mu_point(mu);
  if (std::abs(std::abs(mu) - 1.0) > 1e-12) return false;
  return is_dual_point(dual_, beta0_ * std::conj(p.sqrt_mu));
}

bool Spectrum::same_multiplier(Cx A1, Cx B1, Cx A2, Cx B2, double tol) const {
  return std::abs(A1 - A2) <= tol && congruent_mod_dual(dual_, B1, B2, tol);
}

std::pair<double, double> Spectrum::ab_residual(Cx A, Cx B, Cx delta) const {
  const Cx d = delta - B;
  return {std::norm(d) - std::norm(A) - 0.25 * std::norm(beta0_), pairing(d, A)};
}

}  // namespace hsl
