#pragma once

// File formats. Every JSON document carries "format": "quasipoly/1".
//
//   CycInt       { "n": int, "coeffs": [int, ...] }   (coeffs beyond 64 bits
//                                                      are written as strings)
//   PointSet     { "format", "spec": {...}, "points": [[c...], ...] }
//   Polygon      { "format", "n", "vertices": [[c...], ...] (counterclockwise),
//                  "directions": [[c...], ...], "edges", "u_class",
//                  optional "homothety", "spec" }
//   Homothety    { "scale": CycInt, "k": int, "shift": CycInt }
//   XRayTable    CSV rows "c0,c1,...;count", sorted by key

#include "quasipoly/construct.hpp"
#include "quasipoly/cyclo.hpp"
#include "quasipoly/geometry.hpp"
#include "quasipoly/modelset.hpp"
#include "quasipoly/xray.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace quasipoly {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kFormatTag = "quasipoly/1";

Json coeffs_to_json(const CycInt& z);
CycInt coeffs_from_json(int n, const Json& j);

Json to_json(const CycInt& z);
CycInt cycint_from_json(const Json& j);

// "ball:R" or "box:h1,h2,..."
Window parse_window(std::string_view text);
Json to_json(const Window& w);
Window window_from_json(const Json& j);

Json to_json(const ModelSetSpec& spec);
ModelSetSpec spec_from_json(const Json& j);

Json to_json(const PointSet& ps);
PointSet pointset_from_json(const Json& j);

Json to_json(const Homothety& h);
Homothety homothety_from_json(const Json& j);

struct PolygonDocument {
  Polygon polygon;
  DirectionSet directions;
  std::optional<Homothety> homothety;
  std::optional<ModelSetSpec> spec;
};

Json to_json(const PolygonDocument& doc);
PolygonDocument polygon_from_json(const Json& j);

std::string xray_csv(const XRayTable& table);
std::string points_csv(const std::vector<PlanarPoint>& points);

// Reads and parses a JSON file; throws InvalidArgument on I/O or parse errors.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace quasipoly
