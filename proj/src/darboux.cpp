#include "hsl/darboux.hpp"

#include <algorithm>
#include <cmath>

#include "hsl/error.hpp"

namespace hsl {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr Cx kIc{0.0, 1.0};

Cx e_freq(Cx delta, Cx z) { return std::polar(1.0, kTwoPi * pairing(delta, z)); }

double wrap_pi(double a) { return std::remainder(a, kTwoPi); }

}  // namespace

const char* to_string(DarbouxKind kind) {
  switch (kind) {
    case DarbouxKind::Monochromatic: return "monochromatic";
    case DarbouxKind::Polychromatic: return "polychromatic";
    case DarbouxKind::PointAtInfinity: return "point_at_infinity";
  }
  return "unknown";
}

// ---- sections --------------------------------------------------------------

Quaternion HoloSection::partial(Cx z, int dir) const {
  const double beta = kTwoPi * pairing(beta0_, z);
  const Quaternion G = gauge_exp(beta);
  const double E = std::exp(kTwoPi * pairing(A_, z));
  Quaternion val, der;
  for (const auto& t : terms_) {
    const Cx d = t.delta - B_;
    const Quaternion v = (kOne - kK * Quaternion(t.lambda)) * Quaternion(t.u * e_freq(d, z) * E);
    val += v;
    if (dir == 1) der += v * Quaternion(kTwoPi * Cx(A_.real(), d.real()));
    if (dir == 2) der += v * Quaternion(kTwoPi * Cx(A_.imag(), d.imag()));
  }
  const Quaternion alpha = G * val;
  if (dir == 0) return alpha;
  const double bdir = dir == 1 ? beta0_.real() : beta0_.imag();
  return kJ * (M_PI * bdir) * alpha + G * der;
}

Quaternion HoloSection::value(Cx z) const { return partial(z, 0); }
Quaternion HoloSection::dx(Cx z) const { return partial(z, 1); }
Quaternion HoloSection::dy(Cx z) const { return partial(z, 2); }

HoloSection build_section(const MultiplierKey& key, Cx beta0, const std::vector<Cx>& coeffs) {
  if (key.freqs.empty()) throw Error(ErrorCode::EmptyKey, "multiplier has no admissible frequencies");
  if (coeffs.size() != key.freqs.size()) {
    throw Error(ErrorCode::ConfigError, "one coefficient per admissible frequency required");
  }
  if (std::all_of(coeffs.begin(), coeffs.end(), [](Cx c) { return c == Cx(0.0, 0.0); })) {
    throw Error(ErrorCode::AllZeroCoefficients, "section coefficients all vanish");
  }
  std::vector<SectionTerm> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == Cx(0.0, 0.0)) continue;
    terms.push_back({key.freqs[i], coeffs[i], key.lambdas[i]});
  }
  return HoloSection(beta0, key.A, key.B, std::move(terms));
}

// ---- transforms ------------------------------------------------------------

DarbouxSurface DarbouxSurface::constant_tau(const HslTorus& base, Quaternion tau) {
  DarbouxSurface d(base);
  d.kind_ = DarbouxKind::Monochromatic;
  d.tau_const_ = tau;
  return d;
}

DarbouxSurface DarbouxSurface::at_infinity(const HslTorus& base) {
  DarbouxSurface d(base);
  d.kind_ = DarbouxKind::PointAtInfinity;
  return d;
}

DarbouxSurface DarbouxSurface::polychromatic(const HslTorus& base, Cx B, std::vector<PolyWeight> weights) {
  DarbouxSurface d(base);
  d.kind_ = DarbouxKind::Polychromatic;
  d.B_ = B;
  d.weights_ = std::move(weights);
  // r must be nowhere vanishing; sample it
  const int n = 64;
  d.min_r_ = INFINITY;
  d.max_r_ = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double r = std::abs(d.r(cell_center(base.lattice(), n, i, j)));
      d.min_r_ = std::min(d.min_r_, r);
      d.max_r_ = std::max(d.max_r_, r);
    }
  }
  d.singular_ = d.min_r_ < 1e-8 * d.max_r_;
  return d;
}

double DarbouxSurface::r(Cx z) const {
  const Cx half = 0.5 * base_.beta0();
  Cx p0, p1;
  for (const auto& w : weights_) {
    const Cx e = std::polar(1.0, w.t);
    const Cx term = w.u * std::sin(w.t) * e_freq(B_ - half * e, z);
    p0 += term;
    p1 += e * term;
  }
  return std::norm(p0) + std::norm(p1);
}

Quaternion DarbouxSurface::numerator(Cx z) const {
  const Cx half = 0.5 * base_.beta0();
  Quaternion S;
  for (const auto& s : weights_) {
    const Cx es = std::polar(1.0, s.t);
    const Quaternion left = kOne + kK * Quaternion(es);
    for (const auto& t : weights_) {
      const Cx et = std::polar(1.0, t.t);
      const Cx mid = s.u * std::conj(t.u) * e_freq(half * (et - es), z);
      S += left * Quaternion(mid) * (kOne + kK * Quaternion(et)) * std::sin(t.t);
    }
  }
  return S;
}

Quaternion DarbouxSurface::tau(Cx z) const {
  switch (kind_) {
    case DarbouxKind::Monochromatic: return tau_const_;
    case DarbouxKind::Polychromatic:
      return numerator(z) * Quaternion(1.0 / (r(z) * M_PI * std::conj(base_.beta0())));
    case DarbouxKind::PointAtInfinity: break;
  }
  throw Error(ErrorCode::TransformAtInfinity, "Darboux transform is the constant map at infinity");
}

Quaternion DarbouxSurface::position(Cx z) const {
  const Quaternion t = tau(z);
  const SurfaceJet jet = base_.jet(z);
  return jet.f + gauge_exp(jet.beta) * t * jet.g;
}

DarbouxSurface darboux_mono(const HslTorus& t, const MultiplierKey& key, std::size_t which) {
  if (key.freqs.empty()) throw Error(ErrorCode::EmptyKey, "multiplier has no admissible frequencies");
  const Cx beta0 = t.beta0();
  if (std::abs(key.A) >= kZeroA) {
    // independent of which of δ± is used
    const double a2 = std::norm(key.A);
    const double c = pairing(beta0, key.A);
    const Quaternion tau = -(Quaternion(2.0 * a2) - kJ * c) * Quaternion(key.A) / (M_PI * (4.0 * a2 * a2 + c * c));
    return DarbouxSurface::constant_tau(t, tau);
  }
  if (which >= key.freqs.size()) throw Error(ErrorCode::ConfigError, "frequency index out of range");
  const Cx e = 2.0 * (key.B - key.freqs[which]) / beta0;  // e^{it}
  const double s = e.imag();
  if (std::abs(s) < 1e-12) return DarbouxSurface::at_infinity(t);
  return DarbouxSurface::constant_tau(t, kK * Quaternion(e / (M_PI * std::conj(beta0) * s)));
}

std::vector<double> admissible_angles(const Spectrum& spec, Cx B) {
  const MultiplierKey key = spec.admissible(Cx(0.0, 0.0), B);
  std::vector<double> out;
  for (Cx d : key.freqs) {
    double a = std::arg(2.0 * (key.B - d) / spec.beta0());
    if (a < 0.0) a += kTwoPi;
    out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

DarbouxSurface darboux_poly(const HslTorus& t, Cx B, const std::vector<PolyWeight>& weights) {
  const Cx half = 0.5 * t.beta0();
  bool all_degenerate = true;
  for (const auto& w : weights) {
    const Cx delta = B - half * std::polar(1.0, w.t);
    if (!is_dual_point(t.dual(), delta - half)) {
      throw Error(ErrorCode::AngleNotAdmissible, "angle does not give a frequency in the translated dual lattice");
    }
    all_degenerate = all_degenerate && std::abs(std::sin(w.t)) < 1e-12;
  }
  if (weights.empty()) throw Error(ErrorCode::EmptyKey, "no weights");
  if (all_degenerate) return DarbouxSurface::at_infinity(t);
  return DarbouxSurface::polychromatic(t, B, weights);
}

// ---- normals and angles ----------------------------------------------------

Quaternion dt_left_normal(const DarbouxSurface& d, Cx z) {
  const Quaternion tau = d.tau(z);
  if (tau.norm() < 1e-300) throw Error(ErrorCode::ZeroTau, "tau vanishes");
  const Quaternion G = gauge_exp(d.base().beta(z));
  // −T R T^{-1} with T = Gτg, R = −g^{-1} i g: the two signs cancel
  return G * tau * kI * qinv(tau) * G.conj();
}

LagrangianReport is_lagrangian(const DarbouxSurface& d, int grid_n) {
  LagrangianReport rep;
  for (int i = 0; i < grid_n; ++i) {
    for (int j = 0; j < grid_n; ++j) {
      const Cx z = cell_center(d.base().lattice(), grid_n, i, j);
      const auto [t0, t1] = split_c(d.tau(z));
      const double den = std::norm(t0) + std::norm(t1);
      const double v = den > 0.0 ? std::abs((std::conj(t0) * t1).imag()) / den : 0.0;
      if (v > rep.max_violation) {
        rep.max_violation = v;
        rep.worst_point = z;
      }
    }
  }
  rep.lagrangian = rep.max_violation < 1e-9;
  return rep;
}

double angle_shift_of_tau(Quaternion tau) {
  const auto [u, v] = split_c(tau);
  const double nu = std::abs(u), nv = std::abs(v);
  if (nu + nv == 0.0) throw Error(ErrorCode::ZeroTau, "tau vanishes");
  double a, b, off;
  if (nu >= nv) {
    const Cx c = u / nu;
    a = nu;
    const Cx bc = v * std::conj(c);
    b = bc.real();
    off = bc.imag();
  } else {
    const Cx c = v / nv;
    b = nv;
    const Cx ac = u * std::conj(c);
    a = ac.real();
    off = ac.imag();
  }
  if (std::abs(off) > 1e-9 * (nu + nv)) {
    throw Error(ErrorCode::NotMonochromatic, "tau0 and tau1 cannot be made real simultaneously");
  }
  return 2.0 * std::atan2(b, a);
}

AngleShift lagrangian_angle_shift(const DarbouxSurface& d, int grid_n) {
  if (d.kind() != DarbouxKind::Monochromatic) {
    throw Error(ErrorCode::NotMonochromatic, "angle shift needs a monochromatic transform");
  }
  AngleShift out;
  out.beta_h = angle_shift_of_tau(d.tau(Cx(0.0, 0.0)));
  // per-point shift read off the left normal: N̂ = e^{j(β+β_h)} i
  double sum = 0.0, sum2 = 0.0;
  const int count = grid_n * grid_n;
  for (int i = 0; i < grid_n; ++i) {
    for (int j = 0; j < grid_n; ++j) {
      const Cx z = cell_center(d.base().lattice(), grid_n, i, j);
      const Quaternion q = dt_left_normal(d, z) * -kI;  // = e^{j(β+β_h)}
      const double dev = wrap_pi(std::atan2(q.y, q.w) - d.base().beta(z) - out.beta_h);
      sum += dev;
      sum2 += dev * dev;
    }
  }
  out.offset = sum / count;
  out.stddev = std::sqrt(std::max(0.0, sum2 / count - out.offset * out.offset));
  return out;
}

// ---- μ-sections and prolongation -------------------------------------------

MuSections mu_sections(const HslTorus& t, Cx mu) {
  const Spectrum spec(t.lattice(), t.beta0());
  const SpectralPoint p = spec.mu_point(mu);
  const Cx half = 0.5 * t.beta0();
  MultiplierKey kp = spec.make_key(p.A_mu, half - p.C_mu, {half});
  MultiplierKey km = spec.make_key(-p.A_mu, half + p.C_mu, {half});
  HoloSection ap = build_section(kp, t.beta0(), {Cx(1.0, 0.0)});
  HoloSection am = build_section(km, t.beta0(), {Cx(1.0, 0.0)});
  return {p, std::move(kp), std::move(km), std::move(ap), std::move(am)};
}

Quaternion prolongation_T(const HoloSection& s, const HslTorus& t, Cx z) {
  const Quaternion alpha = s.value(z);
  if (alpha.norm() < 1e-12) throw Error(ErrorCode::ZeroSection, "section vanishes");
  const SurfaceJet jet = t.jet(z);
  const Quaternion ainv = qinv(alpha);
  const Quaternion hx = -(qinv(jet.fx) * s.dx(z) * ainv);
  const Quaternion hy = -(qinv(jet.fy) * s.dy(z) * ainv);
  const double scale = std::max(hx.norm(), hy.norm());
  if (scale < 1e-12) throw Error(ErrorCode::TransformAtInfinity, "prolongation vanishes");
  if (distance(hx, hy) > 1e-9 * scale) {
    throw Error(ErrorCode::InconsistentProlongation, "x and y prolongations disagree");
  }
  return qinv(hx);
}

}  // namespace hsl
