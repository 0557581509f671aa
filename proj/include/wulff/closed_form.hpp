#pragma once

#include <utility>

// Closed-form minimizers on the unit square for the Euclidean and
// crystalline (l1) norms; used as independent oracles for golden tests.

namespace wulff {

enum class SquareBranch { I, II, III, IV };

struct SquareSolution {
  int j_max = 0;
  SquareBranch branch = SquareBranch::I;
  double r = 0.0;
  double energy = 0.0;
  std::pair<int, int> window{0, 0};  // candidate layer counts
  bool tie = false;                  // both window candidates are co-minimal
};

// Unit square, Euclidean norm.  Branches: ball-on-plaquettes (I),
// all-plaquette (II), and the large-mass window regime (III).
SquareSolution square_euclidean(double m);

// Unit square, l1 norm.  Branches: ball (I), plaquette (II), the m = 1
// two-family tie (III), and the large-mass window regime (IV).
SquareSolution square_crystalline(double m);

}  // namespace wulff
