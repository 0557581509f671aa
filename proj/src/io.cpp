#include "wulff/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace wulff {

using nlohmann::json;

json polygon_to_json(const ConvexPolygon& poly) {
  json j = json::array();
  for (const Vec2& v : poly.vertices()) j.push_back({v.x, v.y});
  return j;
}

ConvexPolygon polygon_from_json(const json& j) {
  std::vector<Vec2> v;
  for (const auto& p : j) v.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
  return ConvexPolygon(std::move(v));
}

json region_to_json(const RoundedRegion& region) {
  return {{"core", polygon_to_json(region.core)}, {"rho", region.rho}};
}

RoundedRegion region_from_json(const json& j) {
  return {polygon_from_json(j.at("core")), j.at("rho").get<double>()};
}

namespace {

std::string kind_to_string(LayerShape::Kind k) {
  switch (k) {
    case LayerShape::Kind::FullDomain: return "full-domain";
    case LayerShape::Kind::Plaquette: return "plaquette";
    case LayerShape::Kind::WulffBall: return "wulff-ball";
    default: return "stadium";
  }
}

LayerShape::Kind kind_from_string(const std::string& s) {
  if (s == "full-domain") return LayerShape::Kind::FullDomain;
  if (s == "plaquette") return LayerShape::Kind::Plaquette;
  if (s == "wulff-ball") return LayerShape::Kind::WulffBall;
  if (s == "stadium") return LayerShape::Kind::Stadium;
  throw std::invalid_argument("unknown layer kind: " + s);
}

}  // namespace

TowerCase tower_case_from_string(const std::string& s) {
  if (s == "A") return TowerCase::A;
  if (s == "B") return TowerCase::B;
  if (s == "C") return TowerCase::C;
  if (s == "D") return TowerCase::D;
  return TowerCase::None;
}

json report_to_json(const TowerProfile& profile, const RoundedRegion& domain,
                    const Norm& norm) {
  json layers = json::array();
  for (const LayerShape& layer : profile.layers) {
    json l = {{"kind", kind_to_string(layer.kind)},
              {"core", polygon_to_json(layer.region.core)},
              {"rho", layer.region.rho},
              {"r", layer.r},
              {"area", area(layer.region, norm)},
              {"perimeter", perimeter_phi(layer.region, norm)}};
    bool unique = true;
    ConvexPolygon freedom;
    if (layer.kind == LayerShape::Kind::WulffBall) {
      freedom = erode(domain, norm, layer.r).core;
      unique = freedom.size() <= 1;
    } else if (layer.kind == LayerShape::Kind::Stadium) {
      InscribedBall ball = max_inscribed_radius(domain, norm);
      freedom = ball.center_set;
      unique = layer.region.core.diameter() >= freedom.diameter() * (1.0 - 1e-9);
    }
    l["unique"] = unique;
    l["center_freedom"] = polygon_to_json(freedom);
    layers.push_back(std::move(l));
  }
  json ties = json::array();
  for (const TieDescriptor& t : profile.ties)
    ties.push_back({{"case", to_string(t.tower_case)},
                    {"j", t.j},
                    {"r", t.r},
                    {"energy", t.energy}});
  return {{"case", to_string(profile.tower_case)},
          {"j_max", profile.j_max},
          {"r_bar", profile.r_bar},
          {"energy", profile.energy},
          {"mass", profile.mass},
          {"ties", std::move(ties)},
          {"layers", std::move(layers)}};
}

TowerProfile profile_from_json(const json& j) {
  TowerProfile p;
  p.tower_case = tower_case_from_string(j.at("case").get<std::string>());
  p.j_max = j.at("j_max").get<int>();
  p.r_bar = j.at("r_bar").get<double>();
  p.energy = j.at("energy").get<double>();
  p.mass = j.at("mass").get<double>();
  for (const auto& t : j.at("ties"))
    p.ties.push_back({tower_case_from_string(t.at("case").get<std::string>()),
                      t.at("j").get<int>(), t.at("r").get<double>(),
                      t.at("energy").get<double>()});
  for (const auto& l : j.at("layers")) {
    LayerShape layer{kind_from_string(l.at("kind").get<std::string>()),
                     {polygon_from_json(l.at("core")), l.at("rho").get<double>()},
                     l.at("r").get<double>()};
    p.layers.push_back(std::move(layer));
  }
  return p;
}

namespace {

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

ConvexPolygon oriented_polygon(std::vector<Vec2> v) {
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += cross(v[i], v[(i + 1) % v.size()]);
  if (s < 0.0) std::reverse(v.begin(), v.end());
  return ConvexPolygon(std::move(v));
}

std::vector<Vec2> json_points(const json& j) {
  std::vector<Vec2> v;
  for (const auto& p : j) v.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
  return v;
}

}  // namespace

RoundedRegion parse_domain(const std::string& source) {
  if (source == "unit-square")
    return {ConvexPolygon::rectangle(1.0, 1.0), 0.0};
  if (source.rfind("rectangle:", 0) == 0) {
    std::istringstream ss(source.substr(10));
    double w = 0.0, h = 0.0;
    char sep = 0;
    if (!(ss >> w >> sep >> h) || sep != ':' || w <= 0.0 || h <= 0.0)
      throw std::invalid_argument("invalid rectangle spec: " + source);
    return {ConvexPolygon::rectangle(w, h), 0.0};
  }
  if (source.rfind("regular:", 0) == 0) {
    int k = std::stoi(source.substr(8));
    return {ConvexPolygon::regular(k, 1.0), 0.0};
  }
  json j = load_json_file(source);
  const std::string type = j.at("type").get<std::string>();
  if (type == "polygon") return {oriented_polygon(json_points(j.at("vertices"))), 0.0};
  if (type == "rounded")
    return {oriented_polygon(json_points(j.at("core"))), j.at("radius").get<double>()};
  throw std::invalid_argument("unknown domain type: " + type);
}

Norm parse_norm(const std::string& source) {
  if (source == "euclidean") return Norm::euclidean();
  if (source == "l1") return Norm::l1();
  json j = load_json_file(source);
  if (j.at("type").get<std::string>() != "wulff-polygon")
    throw std::invalid_argument("unknown norm type in " + source);
  return Norm::wulff_polygon(json_points(j.at("vertices")));
}

}  // namespace wulff
