#pragma once

#include <map>
#include <set>
#include <vector>

#include "gmchase/scenario.hpp"

namespace gmchase {

/// The request path of one faithful man: every woman he asked, in order.
/// The final entry is the faithful woman who accepted; all earlier ones
/// are cheating women who sent him onward.
struct ChaseTrace {
    int man = 0;
    std::vector<int> asked;

    int requests() const noexcept { return static_cast<int>(asked.size()); }
    int matched_woman() const { return asked.back(); }
};

struct MatchEntry {
    int woman = 0;
    int requests = 0;

    bool operator==(const MatchEntry&) const = default;
};

/// The complete matching of faithful men onto faithful women.
struct Matching {
    std::map<int, MatchEntry> pairs;

    int total_requests() const noexcept;
};

/// Walk Mr. man's requests: his own wife first, then repeatedly the wife
/// of the lover of the woman who refused, until a faithful woman accepts.
ChaseTrace chase_one(const Scenario& s, int man);

/// chase_one for every faithful man.
Matching match_all(const Scenario& s);

struct InducedImage {
    int target = 0;
    int steps = 0;

    bool operator==(const InducedImage&) const = default;
};

/// Generic chasing engine over abstract index sets. X and Y are both
/// [1, size_x]; phi[x - 1] gives a bijection X -> Y; psi maps X \ A
/// injectively into Y and its domain must be exactly X \ A. For each
/// a in A the engine alternates phi and psi^-1 until it lands outside
/// range(psi), returning that target together with the number of phi
/// applications (so a first-try hit counts as 1, matching "requests").
std::map<int, InducedImage> induced_bijection(int size_x,
                                              const std::vector<int>& phi,
                                              const std::map<int, int>& psi,
                                              const std::set<int>& a_members);

}  // namespace gmchase
