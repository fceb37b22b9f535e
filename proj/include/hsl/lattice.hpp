#pragma once

#include <utility>
#include <vector>

#include "hsl/quaternion.hpp"

namespace hsl {

/// <a, b> = Re(conj(a) b), the Euclidean pairing on C = R^2.
inline double pairing(Cx a, Cx b) { return a.real() * b.real() + a.imag() * b.imag(); }

struct Lattice {
  Cx omega1{1.0, 0.0};
  Cx omega2{0.0, 1.0};
};

struct DualLattice {
  Cx eta1{1.0, 0.0};
  Cx eta2{0.0, 1.0};
};

/// Basis with <eta_a, omega_b> = delta_ab. Throws DegenerateLattice.
DualLattice dual_basis(const Lattice& lattice);

/// Real coordinates (a, b) with z = a eta1 + b eta2.
std::pair<double, double> dual_coords(const DualLattice& dual, Cx z);

bool is_dual_point(const DualLattice& dual, Cx z, double tol = 1e-9);

/// Representative of B + Γ* with dual coordinates in [0, 1). Coordinates within 1e-9
/// of an integer are snapped first so that lattice points reduce to exactly 0.
Cx reduce_mod_dual(const DualLattice& dual, Cx b);

/// True when a - b ∈ Γ* (tolerance on dual coordinates).
inline bool congruent_mod_dual(const DualLattice& dual, Cx a, Cx b, double tol = 1e-9) {
  return is_dual_point(dual, a - b, tol);
}

/// Points of Γ* + shift with |p - center| <= radius + 1e-9, lexicographic by (Re, Im).
std::vector<Cx> enum_translated_disk(const DualLattice& dual, Cx shift, Cx center, double radius);

/// Points of Γ* + shift with ||p - center| - radius| <= tol, same ordering.
std::vector<Cx> enum_translated_circle(const DualLattice& dual, Cx shift, Cx center, double radius,
                                       double tol = 1e-9);

/// Lexicographic (Re, Im) order with 1e-9 slack on Re.
void sort_lex(std::vector<Cx>& pts);

}  // namespace hsl
