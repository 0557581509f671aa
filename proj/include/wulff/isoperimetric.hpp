#pragma once

#include <vector>

#include "wulff/geometry.hpp"

// Constrained isoperimetric problem min { P_phi(E) : E in Omega, |E| = m }
// on a convex domain.  The minimizer class is one of three families:
// the Wulff plaquette Omega^{r_m}, a stadium of maximal inscribed balls,
// or a single Wulff ball; degenerate overlaps resolve toward the simpler
// shape.

namespace wulff {

enum class IsoCase { Plaquette, Stadium, Ball };

struct IsoperimetricSolution {
  IsoCase kind = IsoCase::Plaquette;
  RoundedRegion shape;  // canonical representative
  double r = 0.0;       // plaquette radius r_m, ball radius, or R_Omega
  double perimeter = 0.0;
  bool unique = true;
  // admissible centers (ball) or center segments (stadium) when not unique
  ConvexPolygon center_freedom;
};

IsoperimetricSolution solve_isoperimetric(const RoundedRegion& domain,
                                          const Norm& norm, double m);

// Minimizers for strictly descending masses, re-centered so that each shape
// contains the next (always possible on a convex domain).
std::vector<IsoperimetricSolution> nested_family(const RoundedRegion& domain,
                                                 const Norm& norm,
                                                 const std::vector<double>& masses);

}  // namespace wulff
