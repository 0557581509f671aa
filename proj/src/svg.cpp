#include "wulff/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wulff {

std::vector<ConvexPolygon> layer_outlines(const TowerProfile& profile, const Norm& norm,
                                          int segments) {
  std::vector<ConvexPolygon> out;
  out.reserve(profile.layers.size());
  for (const LayerShape& layer : profile.layers)
    out.push_back(discretize(layer.region, norm, segments));
  return out;
}

namespace {

struct Mapper {
  double scale, x0, y0, height;
  Vec2 operator()(Vec2 p) const {
    return {(p.x - x0) * scale + 20.0, height - 20.0 - (p.y - y0) * scale};
  }
};

void append_point(std::ostringstream& os, Vec2 p) { os << p.x << ' ' << p.y; }

std::string polygon_path(const ConvexPolygon& poly, const Mapper& map) {
  std::ostringstream os;
  const auto& v = poly.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    os << (i == 0 ? "M " : " L ");
    append_point(os, map(v[i]));
  }
  os << " Z";
  return os.str();
}

// Euclidean rounded region: straight offset edges joined by native arcs.
std::string rounded_path(const RoundedRegion& region, const Mapper& map) {
  std::ostringstream os;
  const auto& v = region.core.vertices();
  const double rr = region.rho * map.scale;
  if (v.size() == 1) {  // full circle as two arcs
    Vec2 c = map(v[0]);
    os << "M " << c.x - rr << ' ' << c.y << " A " << rr << ' ' << rr << " 0 1 1 "
       << c.x + rr << ' ' << c.y << " A " << rr << ' ' << rr << " 0 1 1 " << c.x - rr
       << ' ' << c.y << " Z";
    return os.str();
  }
  const std::size_t n = v.size() == 2 ? 2 : v.size();
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    Vec2 a = v[i], b = v[(i + 1) % v.size()];
    Vec2 e = b - a;
    Vec2 nrm = outward_normal(e) * (1.0 / length(e));
    Vec2 p = map(a + nrm * region.rho);
    Vec2 q = map(b + nrm * region.rho);
    if (first) {
      os << "M ";
      append_point(os, p);
      first = false;
    } else {
      os << " A " << rr << ' ' << rr << " 0 0 1 ";  // corner arc to this edge
      append_point(os, p);
    }
    os << " L ";
    append_point(os, q);
  }
  // closing corner arc back to the first offset edge
  {
    Vec2 a = v[0], b = v[1 % v.size()];
    Vec2 e = b - a;
    Vec2 nrm = outward_normal(e) * (1.0 / length(e));
    os << " A " << rr << ' ' << rr << " 0 0 1 ";
    append_point(os, map(a + nrm * region.rho));
  }
  os << " Z";
  return os.str();
}

std::string region_path(const RoundedRegion& region, const Norm& norm,
                        const Mapper& map) {
  if (region.rho > 0.0 && norm.is_euclidean()) return rounded_path(region, map);
  // polygonal norms: 64 chords per rounded corner
  ConvexPolygon outline =
      discretize(region, norm, norm.is_euclidean() ? 256 : 64);
  return polygon_path(outline, map);
}

}  // namespace

std::string render_svg(const TowerProfile& profile, const RoundedRegion& domain,
                       const Norm& norm) {
  ConvexPolygon outline = discretize(domain, norm, 128);
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const Vec2& p : outline.vertices()) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const double w = std::max(xmax - xmin, 1e-9), h = std::max(ymax - ymin, 1e-9);
  const double scale = 600.0 / std::max(w, h);
  const double width = w * scale + 40.0, height = h * scale + 40.0;
  Mapper map{scale, xmin, ymin, height};

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
     << "\" height=\"" << height + 50.0 << "\" viewBox=\"0 0 " << width << ' '
     << height + 50.0 << "\">\n";
  os << "  <path d=\"" << region_path(domain, norm, map)
     << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1.5\"/>\n";
  os << "  <g id=\"layers\">\n";
  for (const LayerShape& layer : profile.layers)  // bottom first, innermost last
    os << "    <path class=\"layer\" d=\"" << region_path(layer.region, norm, map)
       << "\" fill=\"#2266cc\" fill-opacity=\"0.18\" stroke=\"#114488\" "
          "stroke-width=\"0.8\"/>\n";
  os << "  </g>\n";
  os << "  <text x=\"20\" y=\"" << height + 20.0
     << "\" font-family=\"monospace\" font-size=\"14\">j_max = " << profile.j_max
     << ", case " << to_string(profile.tower_case) << "</text>\n";
  os << "  <text x=\"20\" y=\"" << height + 38.0
     << "\" font-family=\"monospace\" font-size=\"14\">r_bar = " << profile.r_bar
     << ", energy = " << profile.energy << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

void write_svg(const TowerProfile& profile, const RoundedRegion& domain,
               const Norm& norm, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << render_svg(profile, domain, norm);
}

}  // namespace wulff
