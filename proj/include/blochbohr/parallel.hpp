#ifndef BLOCHBOHR_PARALLEL_HPP
#define BLOCHBOHR_PARALLEL_HPP

#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace bloch {

// Strided index loop over [begin, end). threads == 0 picks the hardware
// count. Results must be written into per-index slots by the body so the
// assembly is deterministic regardless of the thread count.
inline void parallel_for(int begin, int end, int threads, const std::function<void(int)>& body) {
    const int count = end - begin;
    if (count <= 0) return;
    int t = threads;
    if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
    if (t <= 0) t = 1;
    if (t > count) t = count;
    if (t == 1) {
        for (int i = begin; i < end; ++i) body(i);
        return;
    }

    std::mutex err_mutex;
    std::exception_ptr first_error;
    auto worker = [&](int tid) {
        try {
            for (int i = begin + tid; i < end; i += t) body(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(err_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (int tid = 0; tid < t; ++tid) pool.emplace_back(worker, tid);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace bloch

#endif
