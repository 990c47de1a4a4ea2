#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "latdiss/combi.hpp"
#include "latdiss/dissect.hpp"
#include "latdiss/geometry.hpp"
#include "latdiss/verify.hpp"

// JSON formats:
//   polygon        [[x,y],...]
//   dissection     {"polygon": [[x,y],...], "triangles": [[[x,y],[x,y],[x,y]],...]}
//   triangulation  {"colors": {"0":"A",...}, "triangles": [[0,1,2],...], "corners": [0,1,...]}
// Malformed input throws Error(ParseError).
namespace latdiss::io {

using json = nlohmann::ordered_json;

std::vector<LatticePoint> points_from_json(const json& j);
json to_json(const std::vector<LatticePoint>& points);
json to_json(LatticePoint p);
json to_json(const LatticeTriangle& t);

// One polygon per non-blank line; each is validated with validate_convex.
std::vector<ConvexLatticePolygon> parse_polygons(std::string_view text);
ConvexLatticePolygon parse_polygon(std::string_view text);

struct DissectionFile {
  std::vector<LatticePoint> polygon;  // as written, not validated
  Dissection dissection;
};

DissectionFile parse_dissection(std::string_view text);
json dissection_to_json(const ConvexLatticePolygon& polygon, const Dissection& d);

Triangulation parse_triangulation(std::string_view text);
json triangulation_to_json(const Triangulation& t);

json report_to_json(const VerifyReport& report);

}  // namespace latdiss::io
