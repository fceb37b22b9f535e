#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsl/darboux.hpp"
#include "hsl/torus.hpp"

namespace hsl {

/// Line-oriented `key = value` file with [sections] and # comments.
///
///   [torus]      omega1, omega2, beta0 (complex), coeff = d_re d_im : w x y z (repeatable)
///                or homogeneous = r1 r2
///   [spectrum]   steps, max_norm
///   [darboux]    mode = mono|poly, A, B, freq (index), t (A = 0 shortcut),
///                weight = t : u_re u_im (repeatable)
///   [mu]         mu = re im (repeatable)
///   [export]     grid, projection
///   [verify]     grid, fd_step, tol
struct RunConfig {
  Lattice lattice;
  Cx beta0{1.0, -1.0};
  std::vector<FourierTerm> coeffs;
  std::optional<std::pair<double, double>> homogeneous;

  int sweep_steps = 64;
  double max_norm = 4.0;

  bool darboux_set = false;  // any [darboux] key seen
  std::string darboux_mode = "mono";
  Cx A, B;
  std::size_t freq = 0;
  std::optional<double> t;
  std::vector<PolyWeight> weights;

  std::vector<Cx> mus;

  int export_grid = 128;
  std::string projection = "stereo";

  int verify_grid = 16;
  double fd_step = 1e-5;
  double tol = 1e-6;

  /// Builds and validates the torus; throws ConfigError.
  HslTorus torus() const;
};

/// Throws ConfigError with the offending line number.
RunConfig parse_config(const std::string& text);

/// Throws IoError / ConfigError.
RunConfig load_config(const std::string& path);

}  // namespace hsl
