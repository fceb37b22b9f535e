#include "hsl/fixtures.hpp"

namespace hsl::fixtures {

HslTorus clifford() { return homogeneous_torus(1.0, 1.0); }

HslTorus r2_torus() { return homogeneous_torus(2.0, 1.0); }

HslTorus castro_urbano() {
  // f = α_{(−1+3i)/2} + α_{(3+i)/2}, c_δ = (1 − k·2δ/β0)^{-1} q_δ with
  // q = (1−4j+3k)/5 and (1−3j+4k)/5, so f(0) = (2 − 7j + 7k)/5
  const Lattice sq{Cx(1.0, 0.0), Cx(0.0, 1.0)};
  return HslTorus::create(sq, Cx(3.0, -1.0),
                          {{Cx(-0.5, 1.5), Quaternion(15.0, 0.0, -8.0, 6.0) / 25.0},
                           {Cx(1.5, 0.5), Quaternion(-1.0, 12.0, -6.0, 12.0) / 25.0}});
}

}  // namespace hsl::fixtures
