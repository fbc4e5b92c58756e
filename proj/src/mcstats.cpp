#include "kcut/mcstats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace kcut::mcstats {

std::vector<double> run_replicas(const ReplicaTask& task, std::int64_t n_reps,
                                 std::uint64_t seed, int workers) {
    if (!task) throw std::invalid_argument("run_replicas: empty task");
    if (n_reps < 1) throw std::invalid_argument("run_replicas: n_reps must be >= 1");
    if (workers < 0) throw std::invalid_argument("run_replicas: workers must be >= 0");
    if (workers == 0) {
        workers = static_cast<int>(std::thread::hardware_concurrency());
        if (workers < 1) workers = 1;
    }
    workers = static_cast<int>(std::min<std::int64_t>(workers, n_reps));

    std::vector<double> results(n_reps, 0.0);
    if (workers == 1) {
        for (std::int64_t i = 0; i < n_reps; ++i) {
            Stream stream(seed, static_cast<std::uint64_t>(i));
            results[i] = task(stream);
        }
        return results;
    }

    std::atomic<std::int64_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto body = [&] {
        for (;;) {
            std::int64_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n_reps) return;
            try {
                Stream stream(seed, static_cast<std::uint64_t>(i));
                results[i] = task(stream);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                next.store(n_reps, std::memory_order_relaxed);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return results;
}

Summary summarize(const std::vector<double>& samples) {
    if (samples.size() < 2) throw std::invalid_argument("summarize: need at least two samples");
    const std::int64_t n = static_cast<std::int64_t>(samples.size());
    long double sum = 0.0L;
    for (double x : samples) sum += x;
    const long double mean = sum / n;
    long double ss = 0.0L;
    std::array<long double, 4> pows{0.0L, 0.0L, 0.0L, 0.0L};
    for (double x : samples) {
        const long double d = x - mean;
        ss += d * d;
        long double p = x;
        for (int o = 0; o < 4; ++o) {
            pows[o] += p;
            p *= x;
        }
    }
    Summary s;
    s.n = n;
    s.mean = static_cast<double>(mean);
    s.variance = static_cast<double>(ss / (n - 1));
    s.se_mean = std::sqrt(s.variance / static_cast<double>(n));
    for (int o = 0; o < 4; ++o) s.raw_moments[o] = static_cast<double>(pows[o] / n);
    return s;
}

namespace {

// Sweeps the merged sorted values; at each distinct value both empirical
// cdfs jump past their ties.
template <class Fn>
void sweep_cdfs(std::vector<double>& a, std::vector<double>& b, Fn&& visit) {
    if (a.empty() || b.empty()) throw std::invalid_argument("need nonempty samples");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] == x) ++i;
        while (j < b.size() && b[j] == x) ++j;
        visit(i / na, j / nb);
    }
    if (i < a.size()) visit(i / na, 1.0);
    if (j < b.size()) visit(1.0, j / nb);
}

} // namespace

double ks_distance(std::vector<double> a, std::vector<double> b) {
    double d = 0.0;
    sweep_cdfs(a, b, [&](double fa, double fb) { d = std::max(d, std::abs(fa - fb)); });
    return d;
}

double dominance_margin(std::vector<double> a, std::vector<double> b) {
    double m = 0.0;
    sweep_cdfs(a, b, [&](double fa, double fb) { m = std::max(m, fb - fa); });
    return m;
}

double moment(const std::vector<double>& samples, int order) {
    if (samples.empty()) throw std::invalid_argument("moment: need samples");
    if (order < 1) throw std::invalid_argument("moment: order must be >= 1");
    long double acc = 0.0L;
    for (double x : samples) acc += std::pow(static_cast<long double>(x), order);
    return static_cast<double>(acc / static_cast<long double>(samples.size()));
}

} // namespace kcut::mcstats
