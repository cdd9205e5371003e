#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gmchase/rational.hpp"

namespace gmchase {

/// One village: couples 1..c+f, Mr. i married to Mrs. i. Men 1..c cheat
/// and mistress(i) names the mistress of Mr. i; the assignment is
/// injective and may include a man's own wife. Immutable once validated.
class Scenario {
public:
    /// Sole construction path; enforces every invariant and precomputes
    /// the inverse (lover) map.
    static Scenario validate(int cheating, int faithful, std::vector<int> mistress);

    int cheating() const noexcept { return c_; }
    int faithful() const noexcept { return f_; }
    int couples() const noexcept { return c_ + f_; }

    /// mistress()[i - 1] is the mistress of Mr. i; all indices 1-based.
    const std::vector<int>& mistress() const noexcept { return mistress_; }

    /// The unique m with mistress(m) == woman, or empty when Mrs. woman
    /// is faithful.
    std::optional<int> lover_of(int woman) const;

    bool is_faithful_man(int man) const noexcept { return man > c_ && man <= c_ + f_; }

private:
    Scenario(int c, int f, std::vector<int> mistress, std::vector<int> lover);

    int c_ = 0;
    int f_ = 0;
    std::vector<int> mistress_;
    std::vector<int> lover_;  // lover_[w - 1] = lover of Mrs. w, 0 = none
};

/// (c+f)(c+f-1)...(f+1) = (c+f)!/f!, the number of injective assignments.
Int scenario_count(int cheating, int faithful);

/// Uniform draw over all injective assignments via a partial Fisher-Yates
/// shuffle of [1..c+f]; a pure function of (cheating, faithful, seed).
Scenario random_scenario(int cheating, int faithful, std::uint64_t seed);

/// Streams every scenario exactly once, in lexicographic order of the
/// mistress list. The caller keeps (c+f)!/f! within enumerable range.
class ScenarioStream {
public:
    ScenarioStream(int cheating, int faithful);

    std::optional<Scenario> next();

private:
    bool advance();

    int c_;
    int f_;
    bool started_ = false;
    bool done_ = false;
    std::vector<int> current_;
    std::vector<char> used_;  // used_[w - 1]
};

}  // namespace gmchase
