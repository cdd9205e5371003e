#pragma once

#include <cstdint>
#include <map>

#include "gmchase/exact.hpp"

namespace gmchase {

struct Histogram {
    std::map<long long, long long> counts;
    long long trials = 0;
    std::uint64_t seed = 0;

    bool operator==(const Histogram&) const = default;
};

/// Seeded simulations. Trial t draws the scenario seeded with
/// derive_stream_seed(seed, t), so the histogram is bit-identical for any
/// worker count. threads == 0 picks the default (GM_THREADS when set,
/// else hardware concurrency).
Histogram simulate_single(int cheating, int faithful, long long trials,
                          std::uint64_t seed, int threads = 0);
Histogram simulate_total(int cheating, int faithful, long long trials,
                         std::uint64_t seed, int threads = 0);

/// Half the L1 distance between empirical frequencies and the exact pmf,
/// over the union of supports. An observed value with zero exact mass is
/// a caller bug, not sampling noise, and raises SupportMismatch.
double tv_distance(const Histogram& h, const ExactPmf& pmf);

struct ChiSquared {
    double statistic = 0.0;
    int dof = 0;
};

/// Pearson statistic over cells built left to right: a cell closes once
/// its expected count reaches 5, and an undersized leftover at the right
/// edge merges back into the previous cell. dof = cells - 1.
ChiSquared chi_squared(const Histogram& h, const ExactPmf& pmf);

/// 0.999 quantile of the chi-squared distribution for dof in [1, 64].
double chi_squared_quantile_999(int dof);

/// Worker count: the explicit request when positive, else GM_THREADS,
/// else hardware concurrency (at least 1).
int resolve_thread_count(int requested);

}  // namespace gmchase
