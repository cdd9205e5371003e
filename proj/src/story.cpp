#include "gmchase/story.hpp"

#include <sstream>
#include <vector>

#include "gmchase/chase.hpp"

namespace gmchase {

namespace {

std::string mr(int i) { return "Mr. " + std::to_string(i); }
std::string mrs(int i) { return "Mrs. " + std::to_string(i); }

// "Mr. 1", "Mr. 1 and Mr. 2", "Mr. 1, Mr. 2, and Mr. 3", ...
std::string cheater_names(int cheating) {
    std::string names = mr(1);
    for (int man = 2; man <= cheating; ++man) {
        if (cheating == 2)
            names += " and " + mr(man);
        else
            names += (man == cheating ? ", and " : ", ") + mr(man);
    }
    return names;
}

void dialogue_paragraphs(const Scenario& s, const ChaseTrace& trace,
                         std::vector<std::string>& paragraphs) {
    const int man = trace.man;
    const auto& asked = trace.asked;
    paragraphs.push_back(mr(man) + " first asks his wife, " + mrs(asked[0]) +
                         ": \"My dear wife, will you go with me to Church?\"");
    if (trace.requests() == 1) {
        paragraphs.push_back(
            "She happily accepts, since she has no lover and would rather go to Church. So " +
            mr(man) + " goes to Church with " + mrs(asked[0]) + ".");
        return;
    }
    paragraphs.push_back("She replies: \"Sorry, hubby, but I am going to the pub with my lover, " +
                         mr(*s.lover_of(asked[0])) + ", perhaps his wife " + mrs(asked[1]) +
                         " is willing?\"");
    for (size_t idx = 1; idx + 1 < asked.size(); ++idx) {
        paragraphs.push_back("So " + mr(man) + " asks " + mrs(asked[idx]) +
                             " and she replies: \"Sorry " + mr(man) +
                             ", I can't make it, I am going to the pub with my lover " +
                             mr(*s.lover_of(asked[idx])) + ", why won't you ask his wife, " +
                             mrs(asked[idx + 1]) + "?\"");
    }
    paragraphs.push_back(
        "So he asks " + mrs(asked.back()) +
        ", and she happily accepts, since she has no lover and would rather go to Church. So " +
        mr(man) + " goes to Church with " + mrs(asked.back()) + ".");
}

}  // namespace

std::string tell_story(const Scenario& s) {
    const int n = s.couples();
    const int c = s.cheating();
    const int f = s.faithful();
    std::vector<std::string> paragraphs;

    paragraphs.push_back(
        "Once upon a time there was a village with " + std::to_string(n) +
        " married couples. Let us call them Mr. i and Mrs. i, where Mr. i and Mrs. i are "
        "married to each other, where i goes from 1 to " +
        std::to_string(n) + ".");

    if (c == 0) {
        paragraphs.push_back("It so happened that nobody in the village cheats.");
    } else {
        paragraphs.push_back("It so happened that " + cheater_names(c) +
                             (c == 1 ? " is a cheater. He has one mistress:"
                                     : " are cheaters. They each have one mistress:"));
        std::string bullets;
        for (int man = 1; man <= c; ++man) {
            const int woman = s.mistress()[man - 1];
            bullets += "- The Mistress of " + mr(man) + " is " + mrs(woman) +
                       " (and hence the Lover of " + mrs(woman) + " is " + mr(man) + ")";
            if (woman == man) bullets += " (this can happen!)";
            bullets += ".";
            if (man < c) bullets += "\n";
        }
        paragraphs.push_back(bullets);
        paragraphs.push_back(
            (c == 1 ? "The cheating man and his mistress refuse"
                    : "The " + std::to_string(c) + " cheating men and their mistresses refuse") +
            " to go to Church on Sunday, they would rather go to the pub.");
    }

    if (f == 0) {
        paragraphs.push_back("There is no faithful man to match; everyone is off to the pub.");
    } else if (f == 1) {
        int faithful_woman = 0;
        for (int w = 1; w <= n; ++w) {
            if (!s.lover_of(w)) {
                faithful_woman = w;
                break;
            }
        }
        paragraphs.push_back("There must be a way to match the only faithful man, " + mr(c + 1) +
                             ", with the only faithful woman, " + mrs(faithful_woman) + ".");
    } else {
        paragraphs.push_back("There must be a way to match the " + std::to_string(f) +
                             " faithful men with the " + std::to_string(f) + " faithful women.");
    }

    for (int man = c + 1; man <= n; ++man) dialogue_paragraphs(s, chase_one(s, man), paragraphs);

    std::ostringstream out;
    for (size_t i = 0; i < paragraphs.size(); ++i) {
        if (i > 0) out << "\n";
        out << paragraphs[i] << "\n";
    }
    return out.str();
}

}  // namespace gmchase
