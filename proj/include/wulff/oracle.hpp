#pragma once

#include <utility>
#include <vector>

#include "wulff/geometry.hpp"
#include "wulff/tower.hpp"

// Brute-force verification: grid search over the structural candidate
// families with per-candidate mass correction, plus polygonal-discretization
// recomputation of areas and perimeters.  Validates case selection and
// root-finding of the analytic solver independently of its bisections.

namespace wulff {

struct OracleReport {
  double best_energy = 0.0;
  TowerCase tower_case = TowerCase::None;
  int j = 0;
  double r = 0.0;
  int grid_resolution = 0;
  double discrepancy = 0.0;  // best_energy - analytic energy, filled by callers
};

// Grid oracle bound to one (domain, norm) pair; v(r) is pre-sampled once so
// repeated mass queries stay cheap.
class GridOracle {
 public:
  GridOracle(const RoundedRegion& domain, const Norm& norm, int grid_n);

  OracleReport min_energy(double m) const;

 private:
  double v(double r) const;
  double plaquette_perimeter(double r) const;
  double refine_root(double target, int j, double rlo, double rhi) const;

  RoundedRegion domain_;
  Norm norm_;
  int grid_n_;
  double area_omega_, perim_omega_, wulff_area_;
  double R_, r_cond_, mass_top_, mass_ball_;
  double seg_len_ = 0.0, seg_h_ = 0.0;
  std::vector<double> rgrid_, vgrid_;
};

OracleReport grid_min_energy(const ProblemSpec& spec, int grid_n);

// Shoelace area and edgewise phi*-weighted perimeter of the polygonal
// discretization of the region (chords sampled on the Wulff boundary).
std::pair<double, double> discretized_measure(const RoundedRegion& region,
                                              const Norm& norm, int segments);

}  // namespace wulff
