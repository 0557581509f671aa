#pragma once

#include <string>

#include <json.hpp>

#include "wulff/geometry.hpp"
#include "wulff/tower.hpp"

// File formats shared by the CLI and the tests:
//   domain file  {"type":"polygon","vertices":[[x,y],...]}
//                {"type":"rounded","core":[[x,y],...],"radius":rho}
//   norm file    {"type":"wulff-polygon","vertices":[[x,y],...]}
//   solve report one JSON document per solve (see report_to_json)

namespace wulff {

nlohmann::json polygon_to_json(const ConvexPolygon& poly);
ConvexPolygon polygon_from_json(const nlohmann::json& j);

nlohmann::json region_to_json(const RoundedRegion& region);
RoundedRegion region_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const TowerProfile& profile, const RoundedRegion& domain,
                              const Norm& norm);
TowerProfile profile_from_json(const nlohmann::json& j);

// Built-in names ("unit-square", "rectangle:W:H", "regular:k") or a path to
// a domain file.  Clockwise chains are reversed; nonconvex input throws.
RoundedRegion parse_domain(const std::string& source);

// "euclidean", "l1", or a path to a Wulff-polygon file.
Norm parse_norm(const std::string& source);

TowerCase tower_case_from_string(const std::string& s);

}  // namespace wulff
