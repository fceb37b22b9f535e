#pragma once

#include <cmath>
#include <complex>
#include <utility>

namespace hsl {

/// Elements of the complex subalgebra span{1, i}. Multipliers, frequencies,
/// lattice vectors and the spectral parameters all live here.
using Cx = std::complex<double>;

/// Real quaternion w + x i + y j + z k.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
  constexpr explicit Quaternion(double real) : w(real) {}
  /// Embeds a + b i.
  constexpr Quaternion(Cx c) : w(c.real()), x(c.imag()) {}  // NOLINT(google-explicit-constructor)

  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }
  constexpr Cx complex_part() const { return {w, x}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

inline constexpr Quaternion kOne{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion kI{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kJ{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kK{0.0, 0.0, 0.0, 1.0};

/// Hamilton product.
constexpr Quaternion qmul(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) { return qmul(a, b); }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

/// Inverse conj(a)/|a|^2. Throws Error(ZeroQuaternion) for a = 0.
Quaternion qinv(const Quaternion& a);

/// e^{j beta/2} = cos(beta/2) + j sin(beta/2).
Quaternion gauge_exp(double beta);

/// e^{j theta} = cos(theta) + j sin(theta).
inline Quaternion j_exp(double theta) { return {std::cos(theta), 0.0, std::sin(theta), 0.0}; }

/// Splits q = u + j v with u, v in span{1, i}: u = w + x i, v = y - z i.
/// With this convention j z = conj(z) j for every complex z.
constexpr std::pair<Cx, Cx> split_c(const Quaternion& q) { return {Cx(q.w, q.x), Cx(q.y, -q.z)}; }

/// Inverse of split_c: u + j v.
constexpr Quaternion join_c(Cx u, Cx v) { return {u.real(), u.imag(), v.real(), -v.imag()}; }

/// Euclidean distance |a - b| in R^4.
inline double distance(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

/// Real part of conj(a) b, the Euclidean inner product on R^4.
constexpr double dot(const Quaternion& a, const Quaternion& b) {
  return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

}  // namespace hsl
