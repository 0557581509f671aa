#pragma once

#include <string>
#include <vector>

#include "wulff/geometry.hpp"
#include "wulff/tower.hpp"

namespace wulff {

// Polygonal outlines of the profile layers, bottom (largest) first;
// rounded corners of polygonal-norm layers are exact, Euclidean arcs are
// sampled with `segments` chords per corner.
std::vector<ConvexPolygon> layer_outlines(const TowerProfile& profile, const Norm& norm,
                                          int segments);

// SVG 1.1 document: domain outline plus the tower layers, innermost drawn
// last with stacked opacity; Euclidean arcs are native path arcs, polygonal
// norms render as polylines.  Includes a legend with j_max and r_bar.
std::string render_svg(const TowerProfile& profile, const RoundedRegion& domain,
                       const Norm& norm);

void write_svg(const TowerProfile& profile, const RoundedRegion& domain,
               const Norm& norm, const std::string& path);

}  // namespace wulff
