#include "hsl/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "hsl/error.hpp"

namespace hsl {

namespace {

// rows of the inverse of [eta1 eta2] (as columns), i.e. z -> dual coordinates
struct CoordMap {
  double a11, a12, a21, a22;
};

CoordMap coord_map(const DualLattice& d) {
  const double det = d.eta1.real() * d.eta2.imag() - d.eta2.real() * d.eta1.imag();
  return {d.eta2.imag() / det, -d.eta2.real() / det, -d.eta1.imag() / det, d.eta1.real() / det};
}

double snap(double v) {
  const double r = std::round(v);
  return std::abs(v - r) <= 1e-9 ? r : v;
}

template <class Keep>
std::vector<Cx> enumerate(const DualLattice& dual, Cx shift, Cx center, double radius, Keep keep) {
  const CoordMap m = coord_map(dual);
  // coordinate functionals have norms |row|; pad the box by one cell
  const double r1 = std::hypot(m.a11, m.a12) * radius + 1.0;
  const double r2 = std::hypot(m.a21, m.a22) * radius + 1.0;
  const auto [c1, c2] = dual_coords(dual, center - shift);
  std::vector<Cx> out;
  for (long p = static_cast<long>(std::floor(c1 - r1)); p <= static_cast<long>(std::ceil(c1 + r1)); ++p) {
    for (long q = static_cast<long>(std::floor(c2 - r2)); q <= static_cast<long>(std::ceil(c2 + r2)); ++q) {
      const Cx pt = shift + static_cast<double>(p) * dual.eta1 + static_cast<double>(q) * dual.eta2;
      if (keep(std::abs(pt - center))) out.push_back(pt);
    }
  }
  sort_lex(out);
  return out;
}

}  // namespace

DualLattice dual_basis(const Lattice& l) {
  // W = [w1 w2] columns; E = W^{-T}
  const double a = l.omega1.real(), b = l.omega2.real();
  const double c = l.omega1.imag(), d = l.omega2.imag();
  const double det = a * d - b * c;
  const double scale = std::abs(l.omega1) * std::abs(l.omega2);
  if (!(std::abs(det) > 1e-14 * scale) || scale == 0.0) {
    throw Error(ErrorCode::DegenerateLattice, "lattice generators are linearly dependent");
  }
  // W^{-1} = [d -b; -c a]/det, transpose gives columns eta1, eta2
  return {Cx(d / det, -b / det), Cx(-c / det, a / det)};
}

std::pair<double, double> dual_coords(const DualLattice& dual, Cx z) {
  const CoordMap m = coord_map(dual);
  return {m.a11 * z.real() + m.a12 * z.imag(), m.a21 * z.real() + m.a22 * z.imag()};
}

bool is_dual_point(const DualLattice& dual, Cx z, double tol) {
  const auto [p, q] = dual_coords(dual, z);
  return std::abs(p - std::round(p)) <= tol && std::abs(q - std::round(q)) <= tol;
}

Cx reduce_mod_dual(const DualLattice& dual, Cx b) {
  auto [p, q] = dual_coords(dual, b);
  p = snap(p);
  q = snap(q);
  p -= std::floor(p);
  q -= std::floor(q);
  return p * dual.eta1 + q * dual.eta2;
}

void sort_lex(std::vector<Cx>& pts) {
  std::sort(pts.begin(), pts.end(), [](Cx a, Cx b) {
    if (std::abs(a.real() - b.real()) > 1e-9) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

std::vector<Cx> enum_translated_disk(const DualLattice& dual, Cx shift, Cx center, double radius) {
  return enumerate(dual, shift, center, radius, [radius](double d) { return d <= radius + 1e-9; });
}

std::vector<Cx> enum_translated_circle(const DualLattice& dual, Cx shift, Cx center, double radius,
                                       double tol) {
  return enumerate(dual, shift, center, radius + tol,
                   [radius, tol](double d) { return std::abs(d - radius) <= tol; });
}

}  // namespace hsl
