#pragma once

#include <cstddef>
#include <vector>

namespace rauzy {

// Worker count: RAUZY_THREADS when set (≥ 1), otherwise the OpenMP default.
int worker_count();

// out[i] = f(i), evaluated in parallel; the result order is the index order.
template <class R, class F>
std::vector<R> parallel_map(std::size_t n, F f) {
  std::vector<R> out(n);
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 16) num_threads(worker_count())
  for (long long i = 0; i < count; ++i) out[i] = f(static_cast<std::size_t>(i));
  return out;
}

template <class R, class F>
std::vector<R> serial_map(std::size_t n, F f) {
  std::vector<R> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
  return out;
}

}  // namespace rauzy
