#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hsl/lattice.hpp"
#include "hsl/quaternion.hpp"

namespace hsl {

enum VertexFlag : std::uint8_t {
  kFlagNone = 0,
  kFlagSingular = 1,  // evaluation failed or non-finite
  kFlagPole = 2,      // stereographic pole hit
};

/// points[i*m + j] = surface((i/n) ω1 + (j/m) ω2); both directions wrap.
struct MeshSample {
  int n = 0, m = 0;
  std::vector<Quaternion> points;
  std::vector<std::uint8_t> flags;
};

struct Mesh3 {
  int n = 0, m = 0;
  std::vector<std::array<double, 3>> points;
  std::vector<std::uint8_t> flags;
};

using SurfaceFn = std::function<Quaternion(Cx)>;

/// n, m >= 2 (else ConfigError).
MeshSample sample(const SurfaceFn& surface, const Lattice& lattice, int n, int m, bool parallel = true);

enum class Projection { Ortho1, Ortho2, Ortho3, Ortho4, Stereo };

/// "ortho1".."ortho4", "stereo"; throws ConfigError.
Projection parse_projection(const std::string& name);

/// (x1, x2, x3)/(1 − x4); flags the pole when |1 − x4| < 1e-9.
std::array<double, 3> stereo_point(const Quaternion& p, bool* pole = nullptr);

/// Stereo recentres by the centroid and rescales by the mean radius first.
Mesh3 project(const MeshSample& mesh, Projection mode);

std::string obj_string(const Mesh3& mesh);
void write_obj(const std::string& path, const Mesh3& mesh);

struct SpectrumRow {
  Cx A, B;
  int dim = 0;
  std::vector<Cx> deltas, lambdas;
};

std::string spectrum_csv(const std::vector<SpectrumRow>& rows);
void write_spectrum_csv(const std::string& path, const std::vector<SpectrumRow>& rows);

/// Writes text to path; throws IoError.
void write_text(const std::string& path, const std::string& text);

/// %.17g
std::string fmt_real(double v);

}  // namespace hsl
