#pragma once
// JSON forms of the main result types (nlohmann::json).

#include "json.hpp"
#include "strebel/belyi.hpp"
#include "strebel/dessins.hpp"
#include "strebel/periods.hpp"
#include "strebel/qdiff.hpp"
#include "strebel/ribbon.hpp"

namespace strebel {

using Json = nlohmann::json;

// {"sigma": [[cycle]...], "alpha": [[i,j]...], "lengths": {"<edge>": "p/q"}}
// edge k is the k-th alpha pair
Json to_json(const RibbonGraph& g);
RibbonGraph ribbon_from_json(const Json& j);

Json to_json(cd z);
cd cd_from_json(const Json& j);

// rational maps: {"num": [coeffs], "den": [coeffs]}, lowest degree first
Json to_json(const ExactRatFunc& f);
ExactRatFunc map_from_json(const Json& j);

Json to_json(const Passport& p);
Json to_json(const DessinPassport& p);
Json to_json(const ZeroClassification& c);
Json to_json(const Divisor& d);
Json to_json(const QuadDiff& q);
Json to_json(const PeriodSet& p);
Json to_json(const FindMuResult& r);
Json to_json(const EdgeLengths& e);
Json to_json(const TrajectoryTrace& t, bool with_points = false);
Json to_json(const FeasibilityResult& f);

}  // namespace strebel
