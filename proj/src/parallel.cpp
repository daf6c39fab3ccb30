#include "polysum/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace polysum {

namespace {
std::atomic<unsigned> override_workers{0};
}

unsigned worker_count() {
    if (unsigned w = override_workers.load()) return w;
    if (const char* env = std::getenv("POLYSUM_WORKERS")) {
        try {
            long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (...) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

void set_worker_count(unsigned n) { override_workers.store(n); }

}  // namespace polysum
