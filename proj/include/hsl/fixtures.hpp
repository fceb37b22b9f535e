#pragma once

#include "hsl/torus.hpp"

namespace hsl::fixtures {

/// Γ = Z ⊕ iZ, β0 = 1 − i; the homogeneous torus with r1 = r2 = 1.
HslTorus clifford();

/// Γ = ½Z ⊕ iZ, β0 = 2 − i.
HslTorus r2_torus();

/// Γ = Z ⊕ iZ, β0 = 3 − i, frequencies (−1 + 3i)/2 and (3 + i)/2; f(0) = (2 − 7j + 7k)/5.
HslTorus castro_urbano();

}  // namespace hsl::fixtures
