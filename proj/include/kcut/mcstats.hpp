#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "kcut/rng.hpp"

namespace kcut::mcstats {

using ReplicaTask = std::function<double(Stream&)>;

/// Runs n_reps independent replicas of the task.  Replica i always draws
/// from Stream(seed, i), so the returned vector is identical for every
/// worker count; workers == 0 means hardware concurrency.  The task must be
/// safe to call concurrently.  The first exception thrown by a replica is
/// rethrown after the pool drains.
std::vector<double> run_replicas(const ReplicaTask& task, std::int64_t n_reps,
                                 std::uint64_t seed, int workers = 0);

struct Summary {
    std::int64_t n = 0;
    double mean = 0.0;
    double variance = 0.0; // unbiased
    double se_mean = 0.0;
    std::array<double, 4> raw_moments{}; // orders 1..4
};

/// Requires at least two samples.
Summary summarize(const std::vector<double>& samples);

/// Two-sample Kolmogorov-Smirnov distance between empirical cdfs.
double ks_distance(std::vector<double> a, std::vector<double> b);

/// Largest value of F_b(x) - F_a(x) over all x (at least 0).  Positive and
/// large when draws from a tend to sit above draws from b.
double dominance_margin(std::vector<double> a, std::vector<double> b);

/// Mean of the order-th powers.
double moment(const std::vector<double>& samples, int order);

} // namespace kcut::mcstats
