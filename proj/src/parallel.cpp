#include "gtop/parallel.hpp"

#include <algorithm>
#include <cstdlib>

namespace gtop {

int worker_count() {
  if (const char* env = std::getenv("GTOP_WORKERS")) {
    const int v = std::atoi(env);
    if (v >= 1) return std::min(v, 64);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 4u));
}

}  // namespace gtop
