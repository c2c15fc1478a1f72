#pragma once

#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace invseq::par {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int count) {
#ifdef _OPENMP
  if (count > 0) omp_set_num_threads(count);
#else
  (void)count;
#endif
}

/// Half-open index range [lo, hi).
struct Range {
  std::uint64_t lo;
  std::uint64_t hi;
};

/// Splits [lo, hi) into chunks of at least min_chunk, at most ~8 per thread.
inline std::vector<Range> split(std::uint64_t lo, std::uint64_t hi,
                                std::uint64_t min_chunk) {
  std::vector<Range> out;
  if (lo >= hi) return out;
  const std::uint64_t total = hi - lo;
  std::uint64_t parts = static_cast<std::uint64_t>(max_threads()) * 8;
  if (parts < 1) parts = 1;
  std::uint64_t chunk = (total + parts - 1) / parts;
  if (chunk < min_chunk) chunk = min_chunk;
  for (std::uint64_t a = lo; a < hi; a += chunk) {
    out.push_back({a, a + chunk < hi ? a + chunk : hi});
  }
  return out;
}

}  // namespace invseq::par
