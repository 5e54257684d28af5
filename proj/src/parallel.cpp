#include "rauzy/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace rauzy {

int worker_count() {
  if (const char* env = std::getenv("RAUZY_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
  }
  return omp_get_max_threads();
}

}  // namespace rauzy
