#pragma once

#include <json.hpp>

#include "gmchase/chase.hpp"
#include "gmchase/exact.hpp"
#include "gmchase/montecarlo.hpp"
#include "gmchase/scenario.hpp"

namespace gmchase {

// Stable wire formats. Arbitrary-precision integers travel as decimal
// strings; all indices are 1-based, matching the narrative convention.
using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& value);  // {"num": "...", "den": "..."}
Rational rational_from_json(const nlohmann::json& j);

Json to_json(const Scenario& s);  // {"c": ..., "f": ..., "mistress": [...]}
Scenario scenario_from_json(const nlohmann::json& j);

Json to_json(const ChaseTrace& t);  // {"man": ..., "asked": [...], "requests": ...}
Json to_json(const Matching& m);
Json to_json(const ExactPmf& pmf);  // {"offset": ..., "masses": [...]}
Json to_json(const MomentSet& m);   // {"mean", "variance", "mu3", "mu4"}
Json to_json(const Histogram& h);   // {"trials", "seed", "counts": {"value": count}}
Json to_json(const SeriesPoly& p);  // bare array of rationals by degree

}  // namespace gmchase
