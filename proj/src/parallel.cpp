#include "arcx/parallel.hpp"

#include <cstdlib>
#include <thread>

namespace arcx {

unsigned thread_cap() {
  if (const char* env = std::getenv("ARCX_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) return static_cast<unsigned>(cap);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace arcx
