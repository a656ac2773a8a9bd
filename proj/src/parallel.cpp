#include "ulam/parallel.hpp"

#include <cstdlib>
#include <string>

namespace ulam {

int thread_count() {
  if (const char* env = std::getenv("ULAMCODES_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) {
        return v;
      }
      if (v < 0) {
        return 1;
      }
    } catch (...) {
      return 1;
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace ulam
