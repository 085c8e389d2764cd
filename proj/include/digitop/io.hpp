#pragma once

#include <string>

#include "json.hpp"

#include "digitop/circle.hpp"
#include "digitop/cofib.hpp"
#include "digitop/homotopy.hpp"
#include "digitop/lscat.hpp"
#include "digitop/subdivision.hpp"

namespace digitop {

using Json = nlohmann::json;

// Malformed input; the message carries the file and the JSON location.
struct ParseError : Error {
  using Error::Error;
};

Json point_to_json(const Point& p);
Json image_to_json(const Image& x);
Json map_to_json(const Map& f);
// {"length": N, "points": [...]}
Json path_to_json(const Map& path);
Json homotopy_to_json(const Homotopy& h);
Json bounds_to_json(const BoundsUsed& b);

Point point_from_json(const Json& j, const std::string& where = "");
Image image_from_json(const Json& j, const std::string& where = "");
Map map_from_json(const Json& j, const std::string& where = "");
// Path points must lie in target.
Map path_from_json(const Json& j, const Image& target, const std::string& where = "");
Homotopy homotopy_from_json(const Json& j, const std::string& where = "");

Json subdivision_to_json(const Subdivision& s);
Json retraction_to_json(const RetractionWitness& w);
Json retraction_check_to_json(const RetractionCheck& c);
Json filler_to_json(const FillerWitness& w);
Json lift_to_json(const LiftCertificate& c);
Json categorical_to_json(const CategoricalWitness& w);
Json cover_to_json(const CategoricalCover& c);
Json section_to_json(const Section& s);
Json dcat_to_json(const DcatReport& r);
Json obstruction_to_json(const DiamondLowerBound& b);

template <class W, class F>
Json verdict_to_json(const Verdict<W>& v, F&& witness_to_json) {
  Json j;
  j["outcome"] = to_string(v.outcome);
  if (v.witness) j["witness"] = witness_to_json(*v.witness);
  if (!v.obstruction.empty()) j["obstruction"] = v.obstruction;
  j["bounds"] = bounds_to_json(v.bounds);
  return j;
}

Json load_json_file(const std::string& path);
Image load_image(const std::string& path);
Map load_map(const std::string& path);

// diamond | circle8 | point | sphere:N | interval:N | cube:N:D
Image fixture(const std::string& name);

}  // namespace digitop
