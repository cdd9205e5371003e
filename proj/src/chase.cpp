#include "gmchase/chase.hpp"

#include <string>

#include "gmchase/errors.hpp"

namespace gmchase {

int Matching::total_requests() const noexcept {
    int total = 0;
    for (const auto& [man, entry] : pairs) total += entry.requests;
    return total;
}

ChaseTrace chase_one(const Scenario& s, int man) {
    if (man < 1 || man > s.couples())
        raise(errc::out_of_range, "no Mr. " + std::to_string(man) + " in a village of " +
                                      std::to_string(s.couples()) + " couples");
    if (man <= s.cheating())
        raise(errc::not_faithful,
              "Mr. " + std::to_string(man) + " cheats; only faithful men chase");
    ChaseTrace trace;
    trace.man = man;
    int woman = man;  // his own wife first
    trace.asked.push_back(woman);
    const int bound = s.cheating() + 1;
    while (auto lover = s.lover_of(woman)) {
        woman = *lover;  // the lover's wife shares his index
        trace.asked.push_back(woman);
        if (trace.requests() > bound)
            raise(errc::internal_cycle, "chase for Mr. " + std::to_string(man) + " exceeded " +
                                            std::to_string(bound) +
                                            " requests; scenario state is corrupt");
    }
    return trace;
}

Matching match_all(const Scenario& s) {
    Matching matching;
    for (int man = s.cheating() + 1; man <= s.couples(); ++man) {
        const ChaseTrace trace = chase_one(s, man);
        matching.pairs[man] = MatchEntry{trace.matched_woman(), trace.requests()};
    }
    return matching;
}

std::map<int, InducedImage> induced_bijection(int size_x, const std::vector<int>& phi,
                                              const std::map<int, int>& psi,
                                              const std::set<int>& a_members) {
    if (size_x < 0 || static_cast<int>(phi.size()) != size_x)
        raise(errc::invalid_phi, "phi must list an image for each of the " +
                                     std::to_string(size_x) + " elements of X");
    std::vector<char> phi_seen(size_x, 0);
    for (int y : phi) {
        if (y < 1 || y > size_x)
            raise(errc::invalid_phi, "phi value " + std::to_string(y) + " lies outside Y");
        if (phi_seen[y - 1])
            raise(errc::invalid_phi, "phi maps two elements to " + std::to_string(y));
        phi_seen[y - 1] = 1;
    }
    for (int a : a_members)
        if (a < 1 || a > size_x)
            raise(errc::out_of_range, "A contains " + std::to_string(a) + ", outside X");
    // Keys are distinct and, once checked to lie in X \ A, a size match
    // means the domain is exactly X \ A.
    if (psi.size() + a_members.size() != static_cast<size_t>(size_x))
        raise(errc::invalid_psi, "psi domain has " + std::to_string(psi.size()) +
                                     " elements; together with |A| = " +
                                     std::to_string(a_members.size()) + " it must cover X exactly");
    std::vector<int> psi_inv(size_x, 0);
    for (const auto& [x, y] : psi) {
        if (x < 1 || x > size_x || a_members.contains(x))
            raise(errc::invalid_psi,
                  "psi is defined on " + std::to_string(x) + ", which is not in X \\ A");
        if (y < 1 || y > size_x)
            raise(errc::invalid_psi, "psi value " + std::to_string(y) + " lies outside Y");
        if (psi_inv[y - 1] != 0)
            raise(errc::invalid_psi, "psi maps two elements to " + std::to_string(y));
        psi_inv[y - 1] = x;
    }

    const int step_bound = size_x - static_cast<int>(a_members.size()) + 1;
    std::map<int, InducedImage> result;
    for (int a : a_members) {
        int y = phi[a - 1];
        int steps = 1;
        while (psi_inv[y - 1] != 0) {
            y = phi[psi_inv[y - 1] - 1];
            ++steps;
            if (steps > step_bound)
                raise(errc::no_termination,
                      "chase from " + std::to_string(a) + " exceeded " +
                          std::to_string(step_bound) +
                          " steps; psi is not a bijection between the complements");
        }
        result[a] = InducedImage{y, steps};
    }
    return result;
}

}  // namespace gmchase
