#include "podq/check_report.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace podq {

CheckReport compare_series(std::string name, const Series& lhs, const Series& rhs, i64 upto) {
    CheckReport rep;
    rep.name = std::move(name);
    i64 limit = std::min(lhs.order(), rhs.order());
    if (upto >= 0) limit = std::min(limit, upto);
    rep.order = limit;
    rep.pass = true;
    for (i64 n = 0; n <= limit; ++n) {
        if (lhs.coeff(n) != rhs.coeff(n)) {
            rep.pass = false;
            rep.counterexample = Counterexample{n, rhs.coeff_str(n), lhs.coeff_str(n)};
            break;
        }
    }
    return rep;
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("PODQ_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 256) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

std::vector<CheckReport> run_check_tasks(const std::vector<CheckTask>& tasks,
                                         unsigned max_threads, bool fail_fast) {
    std::vector<std::vector<CheckReport>> slots(tasks.size());
    if (fail_fast || max_threads <= 1 || tasks.size() <= 1) {
        size_t done = 0;
        for (size_t i = 0; i < tasks.size(); ++i) {
            slots[i] = tasks[i]();
            ++done;
            bool failed = false;
            for (const CheckReport& r : slots[i])
                if (!r.pass) failed = true;
            if (failed && fail_fast) break;
        }
        slots.resize(done);
    } else {
        std::atomic<size_t> next{0};
        unsigned workers = std::min<unsigned>(max_threads, static_cast<unsigned>(tasks.size()));
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) return;
                    slots[i] = tasks[i]();
                }
            });
        }
        for (std::thread& t : pool) t.join();
    }
    std::vector<CheckReport> out;
    for (const auto& slot : slots)
        for (const CheckReport& r : slot) out.push_back(r);
    return out;
}

}  // namespace podq
