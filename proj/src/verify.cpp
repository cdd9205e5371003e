#include "gmchase/verify.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "gmchase/chase.hpp"
#include "gmchase/errors.hpp"
#include "gmchase/scenario.hpp"

namespace gmchase {

namespace {

ExactPmf pmf_from_counts(const std::map<long long, long long>& counts, const Int& total) {
    const long long offset = counts.begin()->first;
    const long long top = counts.rbegin()->first;
    std::vector<Rational> masses;
    masses.reserve(static_cast<size_t>(top - offset + 1));
    for (long long v = offset; v <= top; ++v) {
        const auto it = counts.find(v);
        masses.emplace_back(it == counts.end() ? Int(0) : Int(it->second), total);
    }
    return ExactPmf(offset, std::move(masses));
}

[[noreturn]] void check_failed(const std::string& message) {
    throw std::runtime_error(message);
}

std::string pair_label(int c, int f) {
    return "(c=" + std::to_string(c) + ", f=" + std::to_string(f) + ")";
}

// All vectors with f entries >= 1 and slack sum(a_i - 1) <= c.
void predicted_census_support(int c, int f, std::vector<int>& prefix,
                              std::set<std::vector<int>>& out) {
    if (static_cast<int>(prefix.size()) == f) {
        out.insert(prefix);
        return;
    }
    for (int a = 1; a <= c + 1; ++a) {
        prefix.push_back(a);
        predicted_census_support(c - (a - 1), f, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

ExhaustiveTally exhaustive_tally(int cheating, int faithful) {
    if (faithful < 1)
        raise(errc::no_faithful, "tally needs at least one faithful man");
    std::map<long long, long long> singles;
    std::map<long long, long long> totals;
    std::map<std::vector<int>, long long> census;
    long long scenarios = 0;
    bool bijective = true;
    bool within_bound = true;

    ScenarioStream stream(cheating, faithful);
    while (auto s = stream.next()) {
        ++scenarios;
        const Matching matching = match_all(*s);
        std::set<int> women;
        std::vector<int> lengths;
        lengths.reserve(faithful);
        for (const auto& [man, entry] : matching.pairs) {
            women.insert(entry.woman);
            lengths.push_back(entry.requests);
            if (entry.requests > cheating + 1) within_bound = false;
            if (s->lover_of(entry.woman)) bijective = false;
        }
        if (static_cast<int>(women.size()) != faithful) bijective = false;
        ++singles[matching.pairs.at(cheating + 1).requests];
        ++totals[matching.total_requests()];
        ++census[lengths];
    }

    const Int total = scenario_count(cheating, faithful);
    return ExhaustiveTally{pmf_from_counts(singles, total), pmf_from_counts(totals, total),
                           std::move(census), scenarios, bijective, within_bound};
}

std::vector<CheckResult> run_verification(const VerifyOptions& options,
                                          const VerifyRoutes& routes) {
    std::vector<CheckResult> results;
    const auto check = [&results](const std::string& name, auto&& body) {
        CheckResult r{name, false, {}};
        try {
            r.detail = body();
            r.pass = true;
        } catch (const std::exception& e) {
            r.detail = e.what();
        }
        results.push_back(std::move(r));
    };

    // One enumeration pass shared by the oracle checks. The tally route
    // uses only scenario streaming and chasing, never the formulas.
    struct SweepEntry {
        int c;
        int f;
        ExhaustiveTally tally;
    };
    std::vector<SweepEntry> sweep;
    std::string sweep_error;
    try {
        for (int f = 1; f <= options.couples_cap; ++f) {
            for (int c = 0; c + f <= options.couples_cap; ++c) {
                if (scenario_count(c, f) > options.max_size) continue;
                sweep.push_back(SweepEntry{c, f, exhaustive_tally(c, f)});
            }
        }
    } catch (const std::exception& e) {
        sweep_error = e.what();
    }
    long long swept_scenarios = 0;
    for (const auto& entry : sweep) swept_scenarios += entry.tally.scenarios;
    const std::string sweep_scope = std::to_string(sweep.size()) + " (c,f) pairs, " +
                                    std::to_string(swept_scenarios) + " scenarios";

    check("chase-bijection-and-bound", [&] {
        if (!sweep_error.empty()) check_failed("enumeration failed: " + sweep_error);
        for (const auto& entry : sweep) {
            if (!entry.tally.bijective)
                check_failed("matching is not a bijection at " + pair_label(entry.c, entry.f));
            if (!entry.tally.within_bound)
                check_failed("a trace exceeded c+1 requests at " + pair_label(entry.c, entry.f));
        }
        return "every matching a bijection within the c+1 bound over " + sweep_scope;
    });

    check("enumeration-vs-single-pmf", [&] {
        if (!sweep_error.empty()) check_failed("enumeration failed: " + sweep_error);
        for (const auto& entry : sweep) {
            if (!(routes.single(entry.c, entry.f) == entry.tally.single))
                check_failed("single pmf mismatch at " + pair_label(entry.c, entry.f));
        }
        return "exact equality over " + sweep_scope;
    });

    check("enumeration-vs-total-pmf", [&] {
        if (!sweep_error.empty()) check_failed("enumeration failed: " + sweep_error);
        for (const auto& entry : sweep) {
            if (!(routes.total(entry.c, entry.f) == entry.tally.total))
                check_failed("total pmf mismatch at " + pair_label(entry.c, entry.f));
        }
        return "exact equality over " + sweep_scope;
    });

    check("census-support-and-constancy", [&] {
        if (!sweep_error.empty()) check_failed("enumeration failed: " + sweep_error);
        bool always_c_factorial = true;
        long long sample_constant = -1;
        std::string sample_at;
        for (const auto& entry : sweep) {
            std::set<std::vector<int>> predicted;
            std::vector<int> prefix;
            predicted_census_support(entry.c, entry.f, prefix, predicted);
            std::set<std::vector<int>> observed;
            for (const auto& [vec, count] : entry.tally.census) observed.insert(vec);
            if (observed != predicted)
                check_failed("census support mismatch at " + pair_label(entry.c, entry.f));
            const long long constant = entry.tally.census.begin()->second;
            for (const auto& [vec, count] : entry.tally.census) {
                if (count != constant)
                    check_failed("census count varies across support at " +
                                 pair_label(entry.c, entry.f));
            }
            Int c_factorial = 1;
            for (int v = 2; v <= entry.c; ++v) c_factorial *= v;
            if (c_factorial != constant) always_c_factorial = false;
            if (constant > sample_constant) {
                sample_constant = constant;
                sample_at = pair_label(entry.c, entry.f);
            }
        }
        std::ostringstream detail;
        detail << "support = {a_i >= 1, sum(a_i - 1) <= c} with a constant per-vector count over "
               << sweep_scope << "; measured constant "
               << (always_c_factorial ? "equals c! at every pair" : "is NOT c! everywhere")
               << " (largest: " << sample_constant << " at " << sample_at << ")";
        return detail.str();
    });

    check("pgf-single-vs-closed-form", [&] {
        for (int f = 1; f <= options.cross_max; ++f) {
            for (int c = 0; c <= options.cross_max; ++c) {
                const SeriesPoly pgf = routes.pgf_s(c, f);
                const ExactPmf pmf = routes.single(c, f);
                for (int i = 0; i <= std::max<int>(pgf.degree(), static_cast<int>(pmf.max_value()));
                     ++i) {
                    if (pgf.coeff(i) != pmf.at(i))
                        check_failed("coefficient of x^" + std::to_string(i) + " differs at " +
                                     pair_label(c, f));
                }
            }
        }
        return "coefficient-by-coefficient equality for c,f <= " +
               std::to_string(options.cross_max);
    });

    check("pgf-total-vs-closed-form", [&] {
        for (int f = 1; f <= options.cross_max; ++f) {
            for (int c = 0; c <= options.cross_max; ++c) {
                const SeriesPoly pgf = routes.pgf_t(c, f);
                const ExactPmf pmf = routes.total(c, f);
                for (int i = 0; i <= std::max<int>(pgf.degree(), static_cast<int>(pmf.max_value()));
                     ++i) {
                    if (pgf.coeff(i) != pmf.at(i))
                        check_failed("coefficient of x^" + std::to_string(i) + " differs at " +
                                     pair_label(c, f));
                }
            }
        }
        return "coefficient-by-coefficient equality for c,f <= " +
               std::to_string(options.cross_max);
    });

    check("moments-closed-vs-numeric", [&] {
        for (int f = 1; f <= options.cross_max; ++f) {
            for (int c = 0; c <= options.cross_max; ++c) {
                const ExactPmf sp = routes.single(c, f);
                const MomentSet sm = routes.moments_s(c, f);
                if (sm.mean != sp.mean() || sm.variance != central_moment(sp, 2) ||
                    sm.mu3 != central_moment(sp, 3) || sm.mu4 != central_moment(sp, 4))
                    check_failed("single moments differ at " + pair_label(c, f));
                const ExactPmf tp = routes.total(c, f);
                const MomentSet tm = routes.moments_t(c, f);
                if (tm.mean != tp.mean() || tm.variance != central_moment(tp, 2) ||
                    tm.mu3 != central_moment(tp, 3) || tm.mu4 != central_moment(tp, 4))
                    check_failed("total moments differ at " + pair_label(c, f));
            }
        }
        return "closed forms equal exact pmf moments for c,f <= " +
               std::to_string(options.cross_max);
    });

    check("mean-linearity-and-variance-coincidence", [&] {
        for (int f = 1; f <= options.cross_max; ++f) {
            for (int c = 0; c <= options.cross_max; ++c) {
                const MomentSet sm = routes.moments_s(c, f);
                const MomentSet tm = routes.moments_t(c, f);
                if (tm.mean != Rational(f) * sm.mean)
                    check_failed("total mean is not f times the single mean at " +
                                 pair_label(c, f));
                if (tm.variance != sm.variance)
                    check_failed("single and total variances differ at " + pair_label(c, f));
            }
        }
        return "total mean = f * single mean and variances coincide for c,f <= " +
               std::to_string(options.cross_max);
    });

    check("pmf-normalization", [&] {
        for (int f = 1; f <= options.cross_max; ++f) {
            for (int c = 0; c <= options.cross_max; ++c) {
                for (const ExactPmf& pmf : {routes.single(c, f), routes.total(c, f)}) {
                    Rational sum(0);
                    for (const auto& mass : pmf.masses()) sum += mass;
                    if (sum != 1) check_failed("masses do not sum to 1 at " + pair_label(c, f));
                }
            }
        }
        return "masses sum to exactly 1 for c,f <= " + std::to_string(options.cross_max);
    });

    return results;
}

}  // namespace gmchase
