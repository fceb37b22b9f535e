#pragma once

#include <functional>
#include <optional>
#include <string>

#include "hsl/darboux.hpp"
#include "hsl/spectral.hpp"
#include "hsl/torus.hpp"

namespace hsl {

struct FdOptions {
  int grid_n = 16;
  double h = 1e-5;
  double tol = 1e-6;
  bool parallel = true;
};

struct FdReport {
  std::string identity;  // which identity was checked
  int grid_n = 0;
  double step = 0.0;
  double max_rel_residual = 0.0;
  Cx worst_point;
  long excluded = 0;  // grid points skipped (branch/singular)
  bool passed = false;
};

/// fx, fy by central differences vs e^{jβ/2}g, e^{jβ/2}ig, and fy = N fx.
FdReport check_conformal_lagrangian(const HslTorus& t, const FdOptions& opt = {});

/// ∂yα = N ∂xα by central differences.
FdReport check_holomorphic(const HoloSection& s, const HslTorus& t, const FdOptions& opt = {});

/// dα + ½ df H (N α (a−1) + α b) = 0 in both directions. Throws ZeroMu.
FdReport check_dmu_parallel(const HoloSection& s, const HslTorus& t, Cx mu, const FdOptions& opt = {});

struct HslPreservation {
  FdReport conformal;                // f̂ isotropic: |f̂x| = |f̂y|, <f̂x, f̂y> = 0
  FdReport normal;                   // f̂y = N̂ f̂x with the analytic left normal
  std::optional<FdReport> angle;     // monochromatic: N̂ = e^{j(β+β_h)} i
  LagrangianReport lagrangian;
  bool passed() const { return conformal.passed && normal.passed && (!angle || angle->passed); }
};

HslPreservation check_hsl_preservation(const DarbouxSurface& d, const FdOptions& opt = {});

/// f(z + ω) = f(z) for both generators (absolute).
FdReport check_periodicity(const HslTorus& t, const FdOptions& opt = {});

/// Derivative route T = T̂^{-1} vs closed form e^{jβ/2} τ g, relative.
FdReport check_prolongation(const HoloSection& s, const DarbouxSurface& d, const FdOptions& opt = {});

/// α(z + γ) α(z)^{-1} = h_γ for both generators.
FdReport check_multiplier(const HoloSection& s, const Lattice& lattice, const FdOptions& opt = {});

/// residual(h) / residual(h/2).
double convergence_ratio(const std::function<FdReport(double)>& check, double h);

std::string format_report(const FdReport& r);

}  // namespace hsl
