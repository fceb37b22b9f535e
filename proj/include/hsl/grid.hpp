#pragma once

// Grid sweeps. Every kernel has a serial reference next to the OpenMP one;
// results are identical because values land in index order and are reduced serially.

#include <exception>
#include <vector>

namespace hsl {

struct GridMax {
  double value = 0.0;
  long index = -1;  // first index attaining the max; -1 if nothing counted
  long skipped = 0;  // NaN entries (excluded points)
};

/// Max over values, ties resolved to the lowest index, NaN skipped.
GridMax reduce_max(const std::vector<double>& values);

/// values[i] = f(i); serial.
template <class F>
std::vector<double> eval_serial(long count, F&& f) {
  std::vector<double> out(static_cast<std::size_t>(count));
  for (long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = f(i);
  return out;
}

/// values[i] = f(i) with an OpenMP loop; the first exception (by index) is rethrown.
template <class F>
std::vector<double> eval_parallel(long count, F&& f) {
  std::vector<double> out(static_cast<std::size_t>(count));
  std::vector<std::exception_ptr> errs(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(i);
    } catch (...) {
      errs[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errs)
    if (e) std::rethrow_exception(e);
  return out;
}

template <class F>
GridMax grid_max(long count, F&& f, bool parallel) {
  return reduce_max(parallel ? eval_parallel(count, f) : eval_serial(count, f));
}

/// Generic fill: out[i] = f(i).
template <class T, class F>
void fill_serial(std::vector<T>& out, F&& f) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(static_cast<long>(i));
}

template <class T, class F>
void fill_parallel(std::vector<T>& out, F&& f) {
  const long count = static_cast<long>(out.size());
  std::vector<std::exception_ptr> errs(out.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(i);
    } catch (...) {
      errs[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errs)
    if (e) std::rethrow_exception(e);
}

int max_threads();

}  // namespace hsl
