#include "gmchase/json_io.hpp"

#include <string>

namespace gmchase {

Json rational_to_json(const Rational& value) {
    Json j;
    j["num"] = numerator(value).str();
    j["den"] = denominator(value).str();
    return j;
}

Rational rational_from_json(const nlohmann::json& j) {
    const Int num(j.at("num").get<std::string>());
    const Int den(j.at("den").get<std::string>());
    return Rational(num, den);
}

Json to_json(const Scenario& s) {
    Json j;
    j["c"] = s.cheating();
    j["f"] = s.faithful();
    j["mistress"] = s.mistress();
    return j;
}

Scenario scenario_from_json(const nlohmann::json& j) {
    return Scenario::validate(j.at("c").get<int>(), j.at("f").get<int>(),
                              j.at("mistress").get<std::vector<int>>());
}

Json to_json(const ChaseTrace& t) {
    Json j;
    j["man"] = t.man;
    j["asked"] = t.asked;
    j["requests"] = t.requests();
    return j;
}

Json to_json(const Matching& m) {
    Json j;
    Json pairs = Json::array();
    for (const auto& [man, entry] : m.pairs) {
        Json p;
        p["man"] = man;
        p["woman"] = entry.woman;
        p["requests"] = entry.requests;
        pairs.push_back(std::move(p));
    }
    j["pairs"] = std::move(pairs);
    j["total_requests"] = m.total_requests();
    return j;
}

Json to_json(const ExactPmf& pmf) {
    Json j;
    j["offset"] = pmf.offset();
    Json masses = Json::array();
    for (const auto& mass : pmf.masses()) masses.push_back(rational_to_json(mass));
    j["masses"] = std::move(masses);
    return j;
}

Json to_json(const MomentSet& m) {
    Json j;
    j["mean"] = rational_to_json(m.mean);
    j["variance"] = rational_to_json(m.variance);
    j["mu3"] = rational_to_json(m.mu3);
    j["mu4"] = rational_to_json(m.mu4);
    return j;
}

Json to_json(const Histogram& h) {
    Json j;
    j["trials"] = h.trials;
    j["seed"] = h.seed;
    Json counts = Json::object();
    for (const auto& [value, count] : h.counts) counts[std::to_string(value)] = count;
    j["counts"] = std::move(counts);
    return j;
}

Json to_json(const SeriesPoly& p) {
    Json j = Json::array();
    for (const auto& coefficient : p.coefficients()) j.push_back(rational_to_json(coefficient));
    return j;
}

}  // namespace gmchase
