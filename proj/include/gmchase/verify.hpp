#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gmchase/exact.hpp"

namespace gmchase {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    long long max_size = 100000;  // enumeration ceiling on (c+f)!/f!
    int couples_cap = 16;         // ceiling on c+f for the exhaustive sweeps
    int cross_max = 30;           // pgf/moment cross-checks cover c,f <= cross_max
};

/// The formula routes under test, swappable so the suite can be shown to
/// catch an injected fault. Defaults are the production routes.
struct VerifyRoutes {
    std::function<ExactPmf(int, int)> single = [](int c, int f) { return single_pmf(c, f); };
    std::function<ExactPmf(int, int)> total = [](int c, int f) { return total_pmf(c, f); };
    std::function<SeriesPoly(int, int)> pgf_s = [](int c, int f) { return pgf_single(c, f); };
    std::function<SeriesPoly(int, int)> pgf_t = [](int c, int f) { return pgf_total(c, f); };
    std::function<MomentSet(int, int)> moments_s = [](int c, int f) { return single_moments_closed(c, f); };
    std::function<MomentSet(int, int)> moments_t = [](int c, int f) { return total_moments_closed(c, f); };
};

/// Exhaustive-enumeration oracle: chases every scenario once and tallies
/// everything the checks need.
struct ExhaustiveTally {
    ExactPmf single;
    ExactPmf total;
    std::map<std::vector<int>, long long> census;
    long long scenarios = 0;
    bool bijective = true;     // every matching lands on distinct faithful women
    bool within_bound = true;  // every trace has at most c+1 requests
};

ExhaustiveTally exhaustive_tally(int cheating, int faithful);

/// Runs the full self-check battery; one result per check.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {},
                                          const VerifyRoutes& routes = {});

}  // namespace gmchase
