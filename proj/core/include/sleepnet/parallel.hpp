#pragma once

#include <condition_variable>
#include <cstdint>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace sleepnet {

/// Shared worker pool for data-parallel kernels.
///
/// Work is always split into a chunk count that does not depend on the pool
/// size, every chunk writes disjoint output, and reductions are folded in
/// chunk order by the caller. Results are therefore bit-identical for any
/// thread count.
class ThreadPool {
public:
    static ThreadPool& instance() {
        static ThreadPool pool;
        return pool;
    }

    static void set_threads(int n) { instance().resize(n < 1 ? 1 : n); }
    static int threads() { return static_cast<int>(instance().workers_.size()) + 1; }

    /// Runs fn(chunk) for chunk in [0, n_chunks); blocks until all complete.
    /// Exceptions from chunks are rethrown on the calling thread. Calls from
    /// inside a running chunk fall back to serial execution.
    static void run(std::int64_t n_chunks, const std::function<void(std::int64_t)>& fn) {
        if (in_chunk()) {
            for (std::int64_t c = 0; c < n_chunks; ++c) fn(c);
            return;
        }
        instance().run_impl(n_chunks, fn);
    }

    ~ThreadPool() { resize(1); }

private:
    ThreadPool() = default;

    void resize(int total_threads) {
        std::unique_lock lk(mu_);
        stopping_ = true;
        cv_.notify_all();
        lk.unlock();
        for (auto& t : workers_) t.join();
        workers_.clear();
        lk.lock();
        stopping_ = false;
        for (int i = 0; i < total_threads - 1; ++i) {
            workers_.emplace_back([this] { worker_loop(); });
        }
    }

    void run_impl(std::int64_t n_chunks, const std::function<void(std::int64_t)>& fn) {
        if (n_chunks <= 0) return;
        if (workers_.empty() || n_chunks == 1) {
            for (std::int64_t c = 0; c < n_chunks; ++c) fn(c);
            return;
        }
        std::unique_lock lk(mu_);
        job_ = &fn;
        next_chunk_ = 0;
        end_chunk_ = n_chunks;
        pending_ = n_chunks;
        error_ = nullptr;
        ++generation_;
        cv_.notify_all();
        lk.unlock();

        // The calling thread participates.
        for (;;) {
            std::int64_t c;
            {
                std::lock_guard g(mu_);
                if (next_chunk_ >= end_chunk_) break;
                c = next_chunk_++;
            }
            execute(c);
        }
        lk.lock();
        done_cv_.wait(lk, [this] { return pending_ == 0; });
        job_ = nullptr;
        if (error_) std::rethrow_exception(error_);
    }

    static bool& in_chunk() {
        thread_local bool flag = false;
        return flag;
    }

    void execute(std::int64_t chunk) {
        in_chunk() = true;
        try {
            (*job_)(chunk);
        } catch (...) {
            std::lock_guard g(mu_);
            if (!error_) error_ = std::current_exception();
        }
        in_chunk() = false;
        std::lock_guard g(mu_);
        if (--pending_ == 0) done_cv_.notify_all();
    }

    void worker_loop() {
        std::uint64_t seen = 0;
        for (;;) {
            std::int64_t c = -1;
            {
                std::unique_lock lk(mu_);
                cv_.wait(lk, [&] { return stopping_ || (job_ && generation_ != seen && next_chunk_ < end_chunk_); });
                if (stopping_) return;
                if (next_chunk_ >= end_chunk_) {
                    seen = generation_;
                    continue;
                }
                c = next_chunk_++;
            }
            execute(c);
        }
    }

    std::vector<std::thread> workers_;
    std::mutex mu_;
    std::condition_variable cv_;
    std::condition_variable done_cv_;
    const std::function<void(std::int64_t)>* job_ = nullptr;
    std::int64_t next_chunk_ = 0;
    std::int64_t end_chunk_ = 0;
    std::int64_t pending_ = 0;
    std::uint64_t generation_ = 0;
    bool stopping_ = false;
    std::exception_ptr error_;
};

/// Splits [0, n) into fixed-size blocks and runs body(begin, end) per block.
inline void parallel_blocks(std::int64_t n, std::int64_t block,
                            const std::function<void(std::int64_t, std::int64_t)>& body) {
    if (n <= 0) return;
    if (block < 1) block = 1;
    const std::int64_t chunks = (n + block - 1) / block;
    ThreadPool::run(chunks, [&](std::int64_t c) {
        const std::int64_t b = c * block;
        const std::int64_t e = b + block < n ? b + block : n;
        body(b, e);
    });
}

} // namespace sleepnet
