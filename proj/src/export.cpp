#include "hsl/export.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "hsl/error.hpp"
#include "hsl/grid.hpp"

namespace hsl {

std::string fmt_real(double v) {
  if (std::abs(v) < 1e-15) v = 0.0;  // also folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

MeshSample sample(const SurfaceFn& surface, const Lattice& lattice, int n, int m, bool parallel) {
  if (n < 2 || m < 2) throw Error(ErrorCode::ConfigError, "mesh needs n, m >= 2");
  MeshSample out;
  out.n = n;
  out.m = m;
  const std::size_t count = static_cast<std::size_t>(n) * static_cast<std::size_t>(m);
  std::vector<std::pair<Quaternion, std::uint8_t>> vals(count);
  auto eval = [&](long idx) -> std::pair<Quaternion, std::uint8_t> {
    const int i = static_cast<int>(idx / m), j = static_cast<int>(idx % m);
    const Cx z = static_cast<double>(i) / n * lattice.omega1 + static_cast<double>(j) / m * lattice.omega2;
    try {
      const Quaternion q = surface(z);
      if (std::isfinite(q.norm2())) return {q, kFlagNone};
    } catch (const Error&) {
    }
    return {Quaternion(), kFlagSingular};
  };
  if (parallel)
    fill_parallel(vals, eval);
  else
    fill_serial(vals, eval);
  out.points.reserve(count);
  out.flags.reserve(count);
  for (const auto& [q, f] : vals) {
    out.points.push_back(q);
    out.flags.push_back(f);
  }
  return out;
}

Projection parse_projection(const std::string& name) {
  if (name == "ortho1") return Projection::Ortho1;
  if (name == "ortho2") return Projection::Ortho2;
  if (name == "ortho3") return Projection::Ortho3;
  if (name == "ortho4") return Projection::Ortho4;
  if (name == "stereo") return Projection::Stereo;
  throw Error(ErrorCode::ConfigError, "unknown projection '" + name + "'");
}

std::array<double, 3> stereo_point(const Quaternion& p, bool* pole) {
  const double den = 1.0 - p.z;
  const bool hit = std::abs(den) < 1e-9;
  if (pole) *pole = hit;
  if (hit) return {0.0, 0.0, 0.0};
  return {p.w / den, p.x / den, p.y / den};
}

Mesh3 project(const MeshSample& mesh, Projection mode) {
  Mesh3 out;
  out.n = mesh.n;
  out.m = mesh.m;
  out.flags = mesh.flags;
  out.points.resize(mesh.points.size());
  if (mode != Projection::Stereo) {
    const int drop = static_cast<int>(mode);
    for (std::size_t v = 0; v < mesh.points.size(); ++v) {
      const Quaternion& q = mesh.points[v];
      const double c[4] = {q.w, q.x, q.y, q.z};
      std::array<double, 3> p{};
      for (int k = 0, o = 0; k < 4; ++k)
        if (k != drop) p[o++] = c[k];
      out.points[v] = p;
    }
    return out;
  }
  Quaternion centroid;
  std::size_t good = 0;
  for (std::size_t v = 0; v < mesh.points.size(); ++v) {
    if (mesh.flags[v] & kFlagSingular) continue;
    centroid += mesh.points[v];
    ++good;
  }
  if (good == 0) return out;
  centroid = centroid / static_cast<double>(good);
  double radius = 0.0;
  for (std::size_t v = 0; v < mesh.points.size(); ++v)
    if (!(mesh.flags[v] & kFlagSingular)) radius += distance(mesh.points[v], centroid);
  radius /= static_cast<double>(good);
  if (radius == 0.0) radius = 1.0;
  for (std::size_t v = 0; v < mesh.points.size(); ++v) {
    if (mesh.flags[v] & kFlagSingular) continue;
    bool pole = false;
    out.points[v] = stereo_point((mesh.points[v] - centroid) / radius, &pole);
    if (pole) out.flags[v] |= kFlagPole;
  }
  return out;
}

std::string obj_string(const Mesh3& mesh) {
  std::string s;
  for (const auto& p : mesh.points) {
    s += "v " + fmt_real(p[0]) + " " + fmt_real(p[1]) + " " + fmt_real(p[2]) + "\n";
  }
  const int n = mesh.n, m = mesh.m;
  auto idx = [m](int i, int j) { return std::to_string(i * m + j + 1); };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      const int i1 = (i + 1) % n, j1 = (j + 1) % m;
      s += "f " + idx(i, j) + " " + idx(i1, j) + " " + idx(i1, j1) + " " + idx(i, j1) + "\n";
    }
  }
  return s;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
}

void write_obj(const std::string& path, const Mesh3& mesh) { write_text(path, obj_string(mesh)); }

namespace {

std::string cx_list(const std::vector<Cx>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ';';
    s += fmt_real(v[i].real()) + " " + fmt_real(v[i].imag());
  }
  return s;
}

}  // namespace

std::string spectrum_csv(const std::vector<SpectrumRow>& rows) {
  std::string s = "A_re,A_im,B_re,B_im,dim,delta_list,lambda_list\n";
  for (const auto& r : rows) {
    s += fmt_real(r.A.real()) + "," + fmt_real(r.A.imag()) + "," + fmt_real(r.B.real()) + "," +
         fmt_real(r.B.imag()) + "," + std::to_string(r.dim) + "," + cx_list(r.deltas) + "," +
         cx_list(r.lambdas) + "\n";
  }
  return s;
}

void write_spectrum_csv(const std::string& path, const std::vector<SpectrumRow>& rows) {
  write_text(path, spectrum_csv(rows));
}

}  // namespace hsl
