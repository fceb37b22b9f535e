#include "hsl/torus.hpp"

#include <cmath>

#include "hsl/error.hpp"

namespace hsl {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

Cx e_freq(Cx delta, Cx z) { return std::polar(1.0, kTwoPi * pairing(delta, z)); }

// 1 − k·(2δ/β0)
Quaternion m_factor(Cx delta, Cx beta0) { return kOne - kK * Quaternion(2.0 * delta / beta0); }

void require_beta0(const DualLattice& dual, Cx beta0) {
  if (std::abs(beta0) == 0.0 || !is_dual_point(dual, beta0)) {
    throw Error(ErrorCode::Beta0NotInDualLattice, "beta0 must be a nonzero point of the dual lattice");
  }
}

}  // namespace

std::vector<Cx> circle_freqs_beta0(const Lattice& lattice, Cx beta0) {
  const DualLattice dual = dual_basis(lattice);
  require_beta0(dual, beta0);
  const double rad = 0.5 * std::abs(beta0);
  return enum_translated_circle(dual, 0.5 * beta0, Cx(0.0, 0.0), rad, 1e-9 / (1.0 + std::abs(beta0)));
}

std::vector<Cx> admissible_freqs_beta0(const Lattice& lattice, Cx beta0, bool positive_half) {
  std::vector<Cx> out;
  for (Cx d : circle_freqs_beta0(lattice, beta0)) {
    const Cx ratio = d / beta0;
    if (std::abs(ratio.imag()) < 1e-12) continue;  // ±β0/2
    if (positive_half && ratio.imag() < 0.0) continue;
    out.push_back(d);
  }
  return out;
}

HslTorus::HslTorus(const Lattice& l, Cx b, std::vector<FourierTerm> c)
    : lattice_(l), dual_(dual_basis(l)), beta0_(b), coeffs_(std::move(c)) {}

HslTorus HslTorus::from_raw(const Lattice& lattice, Cx beta0, std::vector<FourierTerm> coeffs) {
  return HslTorus(lattice, beta0, std::move(coeffs));
}

HslTorus HslTorus::create(const Lattice& lattice, Cx beta0, std::vector<FourierTerm> coeffs) {
  HslTorus t(lattice, beta0, std::move(coeffs));
  require_beta0(t.dual_, beta0);
  const auto allowed = admissible_freqs_beta0(lattice, beta0, true);
  bool any_nonzero = false;
  for (const auto& term : t.coeffs_) {
    bool ok = false;
    for (Cx a : allowed) ok = ok || std::abs(a - term.delta) < 1e-9;
    if (!ok) throw Error(ErrorCode::InvalidTorus, "frequency not in the positive admissible half-set");
    any_nonzero = any_nonzero || term.c.norm2() > 0.0;
  }
  if (!any_nonzero) throw Error(ErrorCode::InvalidTorus, "all Fourier coefficients vanish");
  return t;
}

Quaternion HslTorus::position(Cx z) const {
  Quaternion s;
  for (const auto& term : coeffs_) s += m_factor(term.delta, beta0_) * Quaternion(e_freq(term.delta, z)) * term.c;
  return gauge_exp(beta(z)) * s;
}

SurfaceJet HslTorus::jet(Cx z) const {
  SurfaceJet out;
  out.beta = beta(z);
  const Quaternion G = gauge_exp(out.beta);
  Quaternion s, sx, sy;
  for (const auto& term : coeffs_) {
    const Quaternion me = m_factor(term.delta, beta0_) * Quaternion(e_freq(term.delta, z));
    const Quaternion v = me * term.c;
    s += v;
    // ∂ e_δ = 2πi δ_{x|y} e_δ, and e_δ commutes with the i in front
    sx += me * Quaternion(Cx(0.0, kTwoPi * term.delta.real())) * term.c;
    sy += me * Quaternion(Cx(0.0, kTwoPi * term.delta.imag())) * term.c;
  }
  out.f = G * s;
  // ∂ e^{jβ/2} = jπβ0_{x|y} e^{jβ/2}
  out.fx = kJ * (M_PI * beta0_.real()) * out.f + G * sx;
  out.fy = kJ * (M_PI * beta0_.imag()) * out.f + G * sy;
  out.g = G.conj() * out.fx;
  if (out.g.norm() < 1e-12) throw Error(ErrorCode::BranchPoint, "g vanishes");
  out.N = j_exp(out.beta) * kI;
  const Quaternion ginv = qinv(out.g);
  out.R = -(ginv * kI * out.g);
  out.H = M_PI * ginv * Quaternion(std::conj(beta0_)) * G * kK;
  return out;
}

Quaternion homogeneous_position(double r1, double r2, Cx z) {
  return j_exp(kTwoPi * r1 * z.real()) / r1 + kI * j_exp(kTwoPi * r2 * z.imag()) / r2;
}

HslTorus homogeneous_torus(double r1, double r2) {
  const Lattice lattice{Cx(1.0 / r1, 0.0), Cx(0.0, 1.0 / r2)};
  const Cx beta0(r1, -r2);
  const Cx delta = Cx(r1, r2) / 2.0;
  // the −δ term folds into the +δ one; solve the single coefficient at z = 0
  const Quaternion c = qinv(m_factor(delta, beta0)) * homogeneous_position(r1, r2, Cx(0.0, 0.0));
  HslTorus t = HslTorus::create(lattice, beta0, {{delta, c}});
  const Cx probe(0.3 / r1, 0.7 / r2);
  if (distance(t.position(probe), homogeneous_position(r1, r2, probe)) > 1e-10) {
    throw Error(ErrorCode::InvalidTorus, "homogeneous coefficient match failed");
  }
  return t;
}

}  // namespace hsl
