#include "gmchase/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "gmchase/chase.hpp"
#include "gmchase/errors.hpp"
#include "gmchase/rng.hpp"
#include "gmchase/scenario.hpp"

namespace gmchase {

int resolve_thread_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("GM_THREADS")) {
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && value > 0)
            return static_cast<int>(std::min(value, 256L));
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 16u));
}

namespace {

template <typename PerTrial>
Histogram run_trials(int cheating, int faithful, long long trials, std::uint64_t seed,
                     int threads, PerTrial&& per_trial) {
    if (faithful < 1)
        raise(errc::no_faithful,
              "simulation needs at least one faithful man, got f=" + std::to_string(faithful));
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    int workers = resolve_thread_count(threads);
    // Thread startup costs more than small runs.
    workers = static_cast<int>(
        std::min<long long>(workers, std::max<long long>(1, trials / 20000)));

    const long long chunk = (trials + workers - 1) / workers;
    std::vector<std::map<long long, long long>> locals(workers);
    auto work = [&](int w) {
        const long long lo = w * chunk;
        const long long hi = std::min(trials, lo + chunk);
        auto& local = locals[w];
        for (long long t = lo; t < hi; ++t) {
            const Scenario s = random_scenario(cheating, faithful,
                                               derive_stream_seed(seed, static_cast<std::uint64_t>(t)));
            ++local[per_trial(s)];
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& thread : pool) thread.join();
    }

    Histogram h;
    h.trials = trials;
    h.seed = seed;
    for (const auto& local : locals)
        for (const auto& [value, count] : local) h.counts[value] += count;
    return h;
}

void require_support(const Histogram& h, const ExactPmf& pmf) {
    for (const auto& [value, count] : h.counts) {
        if (count > 0 && pmf.at(value) == 0)
            raise(errc::support_mismatch, "observed value " + std::to_string(value) +
                                              " has zero exact probability");
    }
}

}  // namespace

Histogram simulate_single(int cheating, int faithful, long long trials, std::uint64_t seed,
                          int threads) {
    return run_trials(cheating, faithful, trials, seed, threads, [](const Scenario& s) {
        return static_cast<long long>(chase_one(s, s.cheating() + 1).requests());
    });
}

Histogram simulate_total(int cheating, int faithful, long long trials, std::uint64_t seed,
                         int threads) {
    return run_trials(cheating, faithful, trials, seed, threads, [](const Scenario& s) {
        return static_cast<long long>(match_all(s).total_requests());
    });
}

double tv_distance(const Histogram& h, const ExactPmf& pmf) {
    if (h.trials <= 0) throw std::invalid_argument("histogram has no trials");
    require_support(h, pmf);
    Rational acc(0);
    for (long long v = pmf.offset(); v <= pmf.max_value(); ++v) {
        const auto it = h.counts.find(v);
        const Rational freq =
            it == h.counts.end() ? Rational(0) : Rational(it->second, h.trials);
        acc += abs(freq - pmf.at(v));
    }
    return to_double(acc / 2);
}

ChiSquared chi_squared(const Histogram& h, const ExactPmf& pmf) {
    if (h.trials <= 0) throw std::invalid_argument("histogram has no trials");
    require_support(h, pmf);
    struct Cell {
        Rational expected{0};
        long long observed = 0;
    };
    // Cells close left to right once the expected count reaches 5; a short
    // leftover at the right edge merges back into the previous cell.
    std::vector<Cell> cells;
    Cell current;
    const Rational threshold(5);
    for (long long v = pmf.offset(); v <= pmf.max_value(); ++v) {
        current.expected += Rational(h.trials) * pmf.at(v);
        if (const auto it = h.counts.find(v); it != h.counts.end())
            current.observed += it->second;
        if (current.expected >= threshold) {
            cells.push_back(std::move(current));
            current = Cell{};
        }
    }
    if (current.expected > 0) {
        if (cells.empty()) {
            cells.push_back(std::move(current));
        } else {
            cells.back().expected += current.expected;
            cells.back().observed += current.observed;
        }
    }
    if (cells.size() < 2)
        raise(errc::degenerate_support,
              "chi-squared needs at least two cells after merging, got " +
                  std::to_string(cells.size()));
    double statistic = 0.0;
    for (const auto& cell : cells) {
        const double expected = to_double(cell.expected);
        const double diff = static_cast<double>(cell.observed) - expected;
        statistic += diff * diff / expected;
    }
    return ChiSquared{statistic, static_cast<int>(cells.size()) - 1};
}

double chi_squared_quantile_999(int dof) {
    // 0.999 quantiles of the chi-squared distribution, dof 1..64.
    static constexpr std::array<double, 64> kQuantiles = {
        10.827566, 13.815511, 16.266236, 18.466827,
        20.515006, 22.457744, 24.321886, 26.124482,
        27.877165, 29.588298, 31.264134, 32.909490,
        34.528179, 36.123274, 37.697298, 39.252355,
        40.790217, 42.312396, 43.820196, 45.314747,
        46.797038, 48.267942, 49.728232, 51.178598,
        52.619656, 54.051962, 55.476020, 56.892285,
        58.301173, 59.703064, 61.098306, 62.487219,
        63.870099, 65.247217, 66.618829, 67.985168,
        69.346452, 70.702887, 72.054663, 73.401958,
        74.744938, 76.083763, 77.418578, 78.749524,
        80.076732, 81.400326, 82.720423, 84.037134,
        85.350565, 86.660815, 87.967980, 89.272151,
        90.573412, 91.871847, 93.167533, 94.460545,
        95.750954, 97.038829, 98.324234, 99.607233,
        100.887885, 102.166248, 103.442377, 104.716325,
    };
    if (dof < 1 || dof > static_cast<int>(kQuantiles.size()))
        throw std::out_of_range("quantile table covers dof 1..64, got " + std::to_string(dof));
    return kQuantiles[dof - 1];
}

}  // namespace gmchase
