#include "hsl/verify.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "hsl/error.hpp"
#include "hsl/grid.hpp"

namespace hsl {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Diff {
  Quaternion dx, dy;
};

template <class F>
Diff central(F&& f, Cx z, double h) {
  return {(f(z + Cx(h, 0.0)) - f(z - Cx(h, 0.0))) / (2.0 * h),
          (f(z + Cx(0.0, h)) - f(z - Cx(0.0, h))) / (2.0 * h)};
}

// residual at every cell centre; BranchPoint-type failures become NaN (excluded)
template <class F>
FdReport run_grid(const std::string& identity, const Lattice& lattice, const FdOptions& opt, F&& residual) {
  const int n = opt.grid_n;
  auto at = [&](long idx) {
    const Cx z = cell_center(lattice, n, static_cast<int>(idx / n), static_cast<int>(idx % n));
    try {
      return residual(z);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::BranchPoint || e.code() == ErrorCode::ZeroSection ||
          e.code() == ErrorCode::ZeroTau)
        return kNaN;
      throw;
    }
  };
  const GridMax gm = grid_max(static_cast<long>(n) * n, at, opt.parallel);
  FdReport rep;
  rep.identity = identity;
  rep.grid_n = n;
  rep.step = opt.h;
  rep.excluded = gm.skipped;
  if (gm.index < 0) {
    rep.max_rel_residual = INFINITY;
    rep.passed = false;
    return rep;
  }
  rep.max_rel_residual = gm.value;
  rep.worst_point = cell_center(lattice, n, static_cast<int>(gm.index / n), static_cast<int>(gm.index % n));
  rep.passed = gm.value < opt.tol;
  return rep;
}

}  // namespace

FdReport check_conformal_lagrangian(const HslTorus& t, const FdOptions& opt) {
  return run_grid("df = e^{jb/2} dz g (conformal Lagrangian), *df = N df", t.lattice(), opt, [&](Cx z) {
    const Diff d = central([&](Cx w) { return t.position(w); }, z, opt.h);
    const SurfaceJet jet = t.jet(z);
    const Quaternion G = gauge_exp(jet.beta);
    const double scale = 1.0 + jet.g.norm();
    const double rx = distance(d.dx, G * jet.g);
    const double ry = distance(d.dy, G * kI * jet.g);
    const double rn = distance(d.dy, jet.N * d.dx);
    return std::max({rx, ry, rn}) / scale;
  });
}

FdReport check_holomorphic(const HoloSection& s, const HslTorus& t, const FdOptions& opt) {
  return run_grid("*d alpha = N d alpha (holomorphicity)", t.lattice(), opt, [&](Cx z) {
    const Diff d = central([&](Cx w) { return s.value(w); }, z, opt.h);
    const Quaternion N = j_exp(t.beta(z)) * kI;
    const double scale = d.dx.norm() + s.value(z).norm();
    return distance(d.dy, N * d.dx) / scale;
  });
}

FdReport check_dmu_parallel(const HoloSection& s, const HslTorus& t, Cx mu, const FdOptions& opt) {
  if (std::abs(mu) == 0.0) throw Error(ErrorCode::ZeroMu, "mu must be nonzero");
  const Quaternion am1(0.5 * (mu + 1.0 / mu) - 1.0);
  const Quaternion b(0.5 * (1.0 / mu - mu) * Cx(0.0, 1.0));
  return run_grid("d^mu alpha = 0 (flat connection family)", t.lattice(), opt, [&](Cx z) {
    const Diff da = central([&](Cx w) { return s.value(w); }, z, opt.h);
    const Diff df = central([&](Cx w) { return t.position(w); }, z, opt.h);
    const SurfaceJet jet = t.jet(z);
    const Quaternion a = s.value(z);
    const Quaternion bracket = jet.N * a * am1 + a * b;
    const Quaternion rx = da.dx + 0.5 * df.dx * jet.H * bracket;
    const Quaternion ry = da.dy + 0.5 * df.dy * jet.H * bracket;
    const double scale = da.dx.norm() + da.dy.norm() + a.norm();
    return std::max(rx.norm(), ry.norm()) / scale;
  });
}

HslPreservation check_hsl_preservation(const DarbouxSurface& d, const FdOptions& opt) {
  const Lattice& lat = d.base().lattice();
  auto fd = [&](Cx z) { return central([&](Cx w) { return d.position(w); }, z, opt.h); };
  HslPreservation out;
  out.conformal = run_grid("f^ conformal: |f^x| = |f^y|, <f^x, f^y> = 0", lat, opt, [&](Cx z) {
    const Diff D = fd(z);
    const double n2 = D.dx.norm2();
    return (std::abs(n2 - D.dy.norm2()) + 2.0 * std::abs(dot(D.dx, D.dy))) / n2;
  });
  out.normal = run_grid("*df^ = N^ df^ with N^ = -T R T^-1 = e^{jb/2} tau i tau^-1 e^{-jb/2}", lat, opt, [&](Cx z) {
    const Diff D = fd(z);
    return distance(D.dy, dt_left_normal(d, z) * D.dx) / D.dx.norm();
  });
  if (d.kind() == DarbouxKind::Monochromatic) {
    const double bh = lagrangian_angle_shift(d, opt.grid_n).beta_h;
    out.angle = run_grid("N^ = e^{j(b + b_h)} i, b_h constant (HSL preserved)", lat, opt, [&](Cx z) {
      const Diff D = fd(z);
      const Quaternion nhat = D.dy * qinv(D.dx);  // normal read off the FD derivatives
      return distance(nhat, j_exp(d.base().beta(z) + bh) * kI);
    });
  }
  out.lagrangian = is_lagrangian(d, opt.grid_n);
  return out;
}

FdReport check_periodicity(const HslTorus& t, const FdOptions& opt) {
  const Lattice& l = t.lattice();
  return run_grid("f(z + gamma) = f(z) on both generators", l, opt, [&](Cx z) {
    const Quaternion f = t.position(z);
    return std::max(distance(t.position(z + l.omega1), f), distance(t.position(z + l.omega2), f));
  });
}

FdReport check_prolongation(const HoloSection& s, const DarbouxSurface& d, const FdOptions& opt) {
  const HslTorus& t = d.base();
  return run_grid("T = -(f_x^-1 alpha_x alpha^-1)^-1 equals e^{jb/2} tau g", t.lattice(), opt, [&](Cx z) {
    const SurfaceJet jet = t.jet(z);
    const Quaternion closed = gauge_exp(jet.beta) * d.tau(z) * jet.g;
    return distance(prolongation_T(s, t, z), closed) / closed.norm();
  });
}

FdReport check_multiplier(const HoloSection& s, const Lattice& l, const FdOptions& opt) {
  return run_grid("alpha(z + gamma) = alpha(z) h_gamma", l, opt, [&](Cx z) {
    const Quaternion a = s.value(z);
    double worst = 0.0;
    for (Cx g : {l.omega1, l.omega2}) {
      const Quaternion h(multiplier_value(s.A(), s.B(), g));
      worst = std::max(worst, distance(s.value(z + g), a * h) / (a.norm() * h.norm()));
    }
    return worst;
  });
}

double convergence_ratio(const std::function<FdReport(double)>& check, double h) {
  return check(h).max_rel_residual / check(0.5 * h).max_rel_residual;
}

std::string format_report(const FdReport& r) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%s %s | n=%d h=%.3g residual=%.3e at (%.6g, %.6g)%s",
                r.passed ? "PASS" : "FAIL", r.identity.c_str(), r.grid_n, r.step, r.max_rel_residual,
                r.worst_point.real(), r.worst_point.imag(),
                r.excluded ? (" excluded=" + std::to_string(r.excluded)).c_str() : "");
  return buf;
}

}  // namespace hsl
