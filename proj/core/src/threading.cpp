#include "domcensus/threading.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace domcensus {

namespace {

std::atomic<int> g_max_threads{0};  // 0 = hardware default

int hardware_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

}  // namespace

int max_threads() {
    int n = g_max_threads.load();
    return n >= 1 ? n : hardware_threads();
}

void set_max_threads(int n) {
    g_max_threads.store(n >= 1 ? n : 0);
}

void parallel_chunks(int count, const std::function<void(int, int)>& fn) {
    if (count <= 0) return;
    int workers = std::min(max_threads(), count);
    if (workers <= 1) {
        fn(0, count);
        return;
    }
    // Fixed chunk grid: ceil(count / workers) per chunk, independent of how
    // many threads actually run them.
    int chunk = (count + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int begin = 0; begin < count; begin += chunk) {
        int end = std::min(begin + chunk, count);
        pool.emplace_back(fn, begin, end);
    }
    for (auto& t : pool) t.join();
}

}  // namespace domcensus
