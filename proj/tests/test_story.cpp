#include <doctest.h>

#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "gmchase/chase.hpp"
#include "gmchase/scenario.hpp"
#include "gmchase/story.hpp"

using namespace gmchase;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    REQUIRE(file.good());
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

// The women asked, in narrative order: every "asks ... Mrs. N" event.
// Refusals say "ask his wife" (no s), so they do not match.
std::vector<int> asked_women(const std::string& story) {
    static const std::regex ask_event(R"(asks (?:his wife, )?Mrs\. ([0-9]+))");
    std::vector<int> women;
    for (std::sregex_iterator it(story.begin(), story.end(), ask_event), end; it != end; ++it)
        women.push_back(std::stoi((*it)[1]));
    return women;
}

}  // namespace

TEST_CASE("the storybook scenario matches the pinned golden file") {
    const std::string story = tell_story(Scenario::validate(3, 1, {2, 4, 3}));
    const std::string golden = read_file(std::string(GMCHASE_REPO_DIR) + "/stories/paper_example.txt");
    CHECK(story == golden);
}

TEST_CASE("story is deterministic, LF only, newline-terminated") {
    const Scenario s = Scenario::validate(3, 2, {2, 5, 3});
    const std::string story = tell_story(s);
    CHECK(story == tell_story(s));
    CHECK(story.back() == '\n');
    CHECK(story.find('\r') == std::string::npos);
}

TEST_CASE("no cheaters yields one immediate acceptance per man") {
    const std::string story = tell_story(Scenario::validate(0, 1, {}));
    CHECK(story.find("nobody in the village cheats") != std::string::npos);
    CHECK(story.find("She happily accepts") != std::string::npos);
    CHECK(story.find("goes to Church with Mrs. 1") != std::string::npos);
    CHECK(asked_women(story) == std::vector<int>{1});
}

TEST_CASE("two-request dialogue ends with Mrs. 1") {
    const std::string story = tell_story(Scenario::validate(1, 1, {2}));
    CHECK(asked_women(story) == std::vector<int>{2, 1});
    CHECK(story.find("goes to Church with Mrs. 1") != std::string::npos);
}

TEST_CASE("self-mistress pairs are flagged") {
    const std::string with_self = tell_story(Scenario::validate(1, 1, {1}));
    CHECK(with_self.find("(this can happen!)") != std::string::npos);
    const std::string without = tell_story(Scenario::validate(1, 1, {2}));
    CHECK(without.find("(this can happen!)") == std::string::npos);
}

TEST_CASE("dialogues name exactly the chased women, in order") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Scenario s = random_scenario(5, 3, seed);
        std::vector<int> expected;
        for (int man = 6; man <= 8; ++man) {
            const ChaseTrace trace = chase_one(s, man);
            expected.insert(expected.end(), trace.asked.begin(), trace.asked.end());
        }
        CHECK(asked_women(tell_story(s)) == expected);
    }
}

TEST_CASE("faithful men narrate in increasing index order") {
    const std::string story = tell_story(Scenario::validate(2, 2, {3, 4}));
    const size_t first = story.find("Mr. 3 first asks his wife");
    const size_t second = story.find("Mr. 4 first asks his wife");
    REQUIRE(first != std::string::npos);
    REQUIRE(second != std::string::npos);
    CHECK(first < second);
}
