#include "gmchase/scenario.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "gmchase/errors.hpp"
#include "gmchase/rng.hpp"

namespace gmchase {

namespace {

void require_nonnegative(int cheating, int faithful) {
    if (cheating < 0 || faithful < 0)
        raise(errc::negative_count, "counts must be nonnegative, got c=" +
                                        std::to_string(cheating) + " f=" + std::to_string(faithful));
}

}  // namespace

Scenario::Scenario(int c, int f, std::vector<int> mistress, std::vector<int> lover)
    : c_(c), f_(f), mistress_(std::move(mistress)), lover_(std::move(lover)) {}

Scenario Scenario::validate(int cheating, int faithful, std::vector<int> mistress) {
    require_nonnegative(cheating, faithful);
    if (static_cast<int>(mistress.size()) != cheating)
        raise(errc::length_mismatch, "mistress list has length " + std::to_string(mistress.size()) +
                                         ", expected c=" + std::to_string(cheating));
    const int couples = cheating + faithful;
    std::vector<int> lover(couples, 0);
    for (int man = 1; man <= cheating; ++man) {
        const int woman = mistress[man - 1];
        if (woman < 1 || woman > couples)
            raise(errc::out_of_range, "mistress of Mr. " + std::to_string(man) + " is " +
                                          std::to_string(woman) + ", outside [1, " +
                                          std::to_string(couples) + "]");
        if (lover[woman - 1] != 0)
            raise(errc::non_injective,
                  "Mrs. " + std::to_string(woman) + " is listed as a mistress more than once");
        lover[woman - 1] = man;
    }
    return Scenario(cheating, faithful, std::move(mistress), std::move(lover));
}

std::optional<int> Scenario::lover_of(int woman) const {
    if (woman < 1 || woman > couples())
        raise(errc::out_of_range, "no Mrs. " + std::to_string(woman) + " in a village of " +
                                      std::to_string(couples()) + " couples");
    const int man = lover_[woman - 1];
    if (man == 0) return std::nullopt;
    return man;
}

Int scenario_count(int cheating, int faithful) {
    require_nonnegative(cheating, faithful);
    Int count = 1;
    for (int v = faithful + 1; v <= cheating + faithful; ++v) count *= v;
    return count;
}

Scenario random_scenario(int cheating, int faithful, std::uint64_t seed) {
    require_nonnegative(cheating, faithful);
    const int couples = cheating + faithful;
    std::vector<int> pool(couples);
    std::iota(pool.begin(), pool.end(), 1);
    SplitMix64 rng(seed);
    std::vector<int> mistress(cheating);
    // Partial Fisher-Yates: the first c entries of a uniform shuffle form
    // a uniform injective c-tuple.
    for (int i = 0; i < cheating; ++i) {
        const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(couples - i)));
        std::swap(pool[i], pool[j]);
        mistress[i] = pool[i];
    }
    return Scenario::validate(cheating, faithful, std::move(mistress));
}

ScenarioStream::ScenarioStream(int cheating, int faithful) : c_(cheating), f_(faithful) {
    require_nonnegative(cheating, faithful);
    used_.assign(static_cast<size_t>(c_) + static_cast<size_t>(f_), 0);
    current_.reserve(c_);
}

std::optional<Scenario> ScenarioStream::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        for (int v = 1; v <= c_; ++v) {
            current_.push_back(v);
            used_[v - 1] = 1;
        }
    } else if (!advance()) {
        done_ = true;
        return std::nullopt;
    }
    return Scenario::validate(c_, f_, current_);
}

bool ScenarioStream::advance() {
    const int n = c_ + f_;
    // Walk back from the last position, releasing values, until one can be
    // bumped to a larger unused value; then refill the suffix minimally.
    for (int pos = c_ - 1; pos >= 0; --pos) {
        used_[current_[pos] - 1] = 0;
        int v = current_[pos] + 1;
        while (v <= n && used_[v - 1]) ++v;
        if (v > n) continue;
        current_[pos] = v;
        used_[v - 1] = 1;
        for (int p = pos + 1; p < c_; ++p) {
            int w = 1;
            while (used_[w - 1]) ++w;
            current_[p] = w;
            used_[w - 1] = 1;
        }
        return true;
    }
    return false;
}

}  // namespace gmchase
