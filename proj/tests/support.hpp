#pragma once

#include <random>

#include "hsl/quaternion.hpp"

namespace testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline double uniform(double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline hsl::Quaternion random_q(double scale = 1.0) {
  return {scale * uniform(), scale * uniform(), scale * uniform(), scale * uniform()};
}

inline hsl::Cx random_c(double scale = 1.0) { return {scale * uniform(), scale * uniform()}; }

}  // namespace testing
