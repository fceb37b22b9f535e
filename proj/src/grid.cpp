#include "hsl/grid.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hsl {

GridMax reduce_max(const std::vector<double>& values) {
  GridMax out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (std::isnan(v)) {
      ++out.skipped;
      continue;
    }
    if (out.index < 0 || v > out.value) {
      out.value = v;
      out.index = static_cast<long>(i);
    }
  }
  return out;
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace hsl
