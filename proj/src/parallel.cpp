#include "hetealloc/parallel.hpp"

namespace hetealloc {

unsigned default_thread_count() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

}  // namespace hetealloc
