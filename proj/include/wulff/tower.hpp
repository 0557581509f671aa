#pragma once

#include <string>
#include <vector>

#include "wulff/geometry.hpp"

// Stacked variational problem: minimize the summed anisotropic perimeter of
// nested level sets E_1 >= E_2 >= ... >= E_jmax in a convex domain, subject
// to sum |E_j| = m.  Candidate families follow the structure theorem for
// convex planar domains: identical plaquettes (A), plaquettes with a top
// Wulff ball (B), full domains with a top ball (C), or stacked stadiums of
// maximal inscribed balls (D).

namespace wulff {

enum class TowerCase { A, B, C, D, None };

std::string to_string(TowerCase c);

struct ProblemSpec {
  RoundedRegion domain;
  Norm norm;
  double m = 0.0;
};

struct LayerShape {
  enum class Kind { FullDomain, Plaquette, WulffBall, Stadium } kind;
  RoundedRegion region;
  double r = 0.0;  // plaquette/ball radius; R_Omega for stadium layers
};

struct TieDescriptor {
  TowerCase tower_case = TowerCase::None;
  int j = 0;
  double r = 0.0;
  double energy = 0.0;
};

struct TowerProfile {
  std::vector<LayerShape> layers;  // bottom (largest) first
  int j_max = 0;
  TowerCase tower_case = TowerCase::None;
  double r_bar = 0.0;
  double energy = 0.0;
  double mass = 0.0;
  std::vector<TieDescriptor> ties;  // co-minimal families not returned
};

TowerProfile solve_tower(const ProblemSpec& spec);

// solve_tower over a list of masses; asserts that energy is nondecreasing.
std::vector<TowerProfile> energy_curve(const RoundedRegion& domain, const Norm& norm,
                                       const std::vector<double>& masses);

struct CheegerResult {
  double r_star = 0.0;
  RoundedRegion shape;
};

// Limit plaquette of the normalized minimizers as m -> infinity: the
// minimizer of perimeter/area among Wulff plaquettes of the domain.
CheegerResult cheeger_limit(const RoundedRegion& domain, const Norm& norm);

}  // namespace wulff
