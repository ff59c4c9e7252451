#include "mop/util.hpp"

#include <cstdlib>
#include <exception>
#include <mutex>
#include <string_view>
#include <thread>
#include <vector>

namespace mop {

void parallel_for(int count, const std::function<void(int)>& fn) {
    if (count <= 0) return;
    const char* env = std::getenv("MOP_NO_PARALLEL");
    bool serial = (env && std::string_view(env) == "1");
    unsigned hw = std::thread::hardware_concurrency();
    int workers = serial ? 1 : static_cast<int>(hw ? hw : 1);
    workers = std::min(workers, count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex err_mutex;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (int i = w; i < count; i += workers) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace mop
