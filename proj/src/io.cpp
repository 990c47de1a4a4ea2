#include "latdiss/io.hpp"

#include <sstream>

#include "latdiss/error.hpp"

namespace latdiss::io {

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

std::int64_t integer(const json& j) {
  if (!j.is_number_integer()) throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    throw Error(ErrorCode::ParseError, "integer out of range: " + j.dump());
  }
  return j.get<std::int64_t>();
}

LatticePoint point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::ParseError, "expected [x,y], got " + j.dump());
  return {integer(j[0]), integer(j[1])};
}

LatticeTriangle triangle_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) {
    throw Error(ErrorCode::ParseError, "expected a triangle [[x,y],[x,y],[x,y]], got " + j.dump());
  }
  return {point_from_json(j[0]), point_from_json(j[1]), point_from_json(j[2])};
}

}  // namespace

std::vector<LatticePoint> points_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an array of [x,y] pairs");
  std::vector<LatticePoint> out;
  out.reserve(j.size());
  for (const auto& p : j) out.push_back(point_from_json(p));
  return out;
}

json to_json(LatticePoint p) { return json::array({p.x, p.y}); }

json to_json(const std::vector<LatticePoint>& points) {
  json out = json::array();
  for (const auto& p : points) out.push_back(to_json(p));
  return out;
}

json to_json(const LatticeTriangle& t) { return json::array({to_json(t.v0), to_json(t.v1), to_json(t.v2)}); }

std::vector<ConvexLatticePolygon> parse_polygons(std::string_view text) {
  std::vector<ConvexLatticePolygon> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(validate_convex(points_from_json(parse_json(line))));
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "no polygon found");
  return out;
}

ConvexLatticePolygon parse_polygon(std::string_view text) {
  auto polygons = parse_polygons(text);
  if (polygons.size() != 1) {
    throw Error(ErrorCode::ParseError, "expected exactly one polygon, got " + std::to_string(polygons.size()));
  }
  return std::move(polygons.front());
}

DissectionFile parse_dissection(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("triangles")) {
    throw Error(ErrorCode::ParseError, "dissection must be an object with a \"triangles\" array");
  }
  DissectionFile out;
  if (j.contains("polygon")) out.polygon = points_from_json(j["polygon"]);
  const auto& tris = j["triangles"];
  if (!tris.is_array()) throw Error(ErrorCode::ParseError, "\"triangles\" must be an array");
  for (const auto& t : tris) out.dissection.triangles.push_back(triangle_from_json(t));
  return out;
}

json dissection_to_json(const ConvexLatticePolygon& polygon, const Dissection& d) {
  json out = json::object();
  out["polygon"] = to_json(std::vector<LatticePoint>(polygon.vertices().begin(), polygon.vertices().end()));
  json tris = json::array();
  for (const auto& t : d.triangles) tris.push_back(to_json(t));
  out["triangles"] = std::move(tris);
  return out;
}

Triangulation parse_triangulation(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("colors") || !j.contains("triangles") || !j.contains("corners")) {
    throw Error(ErrorCode::ParseError, "triangulation needs \"colors\", \"triangles\" and \"corners\"");
  }
  Triangulation t;
  const auto& colors = j["colors"];
  if (!colors.is_object()) throw Error(ErrorCode::ParseError, "\"colors\" must map vertex ids to letters");
  t.vertex_colors.assign(colors.size(), '\0');
  for (const auto& [key, value] : colors.items()) {
    std::size_t id = 0;
    try {
      std::size_t used = 0;
      id = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "vertex id '" + key + "' is not a number");
    }
    if (id >= t.vertex_colors.size()) {
      throw Error(ErrorCode::ParseError, "vertex ids must be dense 0.." + std::to_string(colors.size() - 1));
    }
    if (!value.is_string() || value.get<std::string>().size() != 1) {
      throw Error(ErrorCode::ParseError, "color of vertex " + key + " must be a single letter");
    }
    t.vertex_colors[id] = value.get<std::string>()[0];
  }
  for (const auto& f : j["triangles"]) {
    if (!f.is_array() || f.size() != 3) throw Error(ErrorCode::ParseError, "triangle must be [a,b,c]");
    t.triangles.push_back({static_cast<VertexId>(integer(f[0])), static_cast<VertexId>(integer(f[1])),
                           static_cast<VertexId>(integer(f[2]))});
  }
  for (const auto& c : j["corners"]) t.corners.push_back(static_cast<VertexId>(integer(c)));
  return t;
}

json triangulation_to_json(const Triangulation& t) {
  json out = json::object();
  json colors = json::object();
  for (std::size_t i = 0; i < t.vertex_colors.size(); ++i) colors[std::to_string(i)] = std::string(1, t.vertex_colors[i]);
  out["colors"] = std::move(colors);
  json tris = json::array();
  for (const auto& f : t.triangles) tris.push_back(json::array({f[0], f[1], f[2]}));
  out["triangles"] = std::move(tris);
  out["corners"] = t.corners;
  return out;
}

json report_to_json(const VerifyReport& report) {
  json out = json::object();
  out["valid"] = report.valid;
  out["triangle_count"] = report.triangle_count;
  out["doubled_area_total"] = report.doubled_area_total;
  json checks = json::array();
  for (const auto& c : report.checks) {
    json entry = json::object();
    entry["name"] = c.name;
    entry["passed"] = c.passed;
    entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  out["checks"] = std::move(checks);
  if (!report.diagnostics.empty()) out["diagnostics"] = report.diagnostics;
  return out;
}

}  // namespace latdiss::io
