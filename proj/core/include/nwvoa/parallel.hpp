#ifndef NWVOA_PARALLEL_HPP
#define NWVOA_PARALLEL_HPP

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace nwvoa {

/* Index-parallel map over pure work items.  Callers must write only to
 * per-index slots; results are merged in index order afterwards, so output
 * stays deterministic. */
template <class F>
void parallel_for(std::size_t n, F&& f) {
    unsigned hw = std::thread::hardware_concurrency();
    std::size_t nt = std::min<std::size_t>(hw ? hw : 1, n);
    if (nt <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < nt; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace nwvoa

#endif
