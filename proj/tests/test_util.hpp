#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "wulff/geometry.hpp"

// Shared generators for property tests: random convex domains and random
// centrally symmetric Wulff hexagons.

namespace wulff_test {

inline wulff::ConvexPolygon random_convex_polygon(std::mt19937& rng, int max_vertices,
                                                  double target_diameter) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
  std::uniform_real_distribution<double> radius(0.3, 1.0);
  for (;;) {
    std::vector<wulff::Vec2> pts;
    int n = std::max(8, max_vertices + 4);
    for (int i = 0; i < n; ++i) {
      double a = angle(rng), r = radius(rng);
      pts.push_back({r * std::cos(a), r * std::sin(a)});
    }
    wulff::ConvexPolygon hull = wulff::convex_hull(pts);
    if (hull.size() < 3 || static_cast<int>(hull.size()) > max_vertices) continue;
    double d = hull.diameter();
    if (d <= 1e-6) continue;
    return hull.scaled(target_diameter / d);
  }
}

inline wulff::Norm random_hexagon_norm(std::mt19937& rng) {
  std::uniform_real_distribution<double> jitter(-0.25, 0.25);
  std::uniform_real_distribution<double> radius(0.6, 1.4);
  const double pi = 3.14159265358979323846;
  for (;;) {
    std::vector<wulff::Vec2> pts;
    for (int i = 0; i < 3; ++i) {
      double a = pi * (i + 0.5) / 3.0 + jitter(rng);
      double r = radius(rng);
      pts.push_back({r * std::cos(a), r * std::sin(a)});
    }
    std::vector<wulff::Vec2> sym;
    for (const auto& p : pts) {
      sym.push_back(p);
      sym.push_back(-p);
    }
    wulff::ConvexPolygon hull = wulff::convex_hull(sym);
    if (hull.size() != 6) continue;  // a dropped pair would break symmetry checks
    try {
      return wulff::Norm::wulff_polygon(hull.vertices());
    } catch (const std::invalid_argument&) {
      continue;
    }
  }
}

}  // namespace wulff_test
