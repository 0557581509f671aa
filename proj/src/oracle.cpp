#include "wulff/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wulff {

GridOracle::GridOracle(const RoundedRegion& domain, const Norm& norm, int grid_n)
    : domain_(domain), norm_(norm), grid_n_(grid_n) {
  if (grid_n < 1000) throw std::invalid_argument("GridOracle: grid_n must be >= 1000");
  if (domain.empty()) throw std::invalid_argument("GridOracle: empty domain");
  area_omega_ = area(domain_, norm_);
  perim_omega_ = perimeter_phi(domain_, norm_);
  wulff_area_ = norm_.wulff_area();
  InscribedBall ball = max_inscribed_radius(domain_, norm_);
  R_ = ball.radius;
  r_cond_ = rw_condition_radius(domain_, norm_);
  mass_top_ = area(plaquette(domain_, norm_, R_), norm_);
  mass_ball_ = R_ * R_ * wulff_area_;
  if (ball.center_set.size() == 2) {
    Vec2 a = ball.center_set.vertices()[0], b = ball.center_set.vertices()[1];
    seg_len_ = distance(a, b);
    Vec2 u = (b - a) * (1.0 / seg_len_);
    seg_h_ = norm_.support(outward_normal(u));
  }
  rgrid_.resize(static_cast<std::size_t>(grid_n_) + 1);
  vgrid_.resize(rgrid_.size());
  for (int k = 0; k <= grid_n_; ++k) {
    rgrid_[k] = r_cond_ + (R_ - r_cond_) * static_cast<double>(k) / grid_n_;
    vgrid_[k] = v(rgrid_[k]);
  }
  vgrid_.back() = mass_top_;
}

double GridOracle::v(double r) const {
  RoundedRegion p = plaquette(domain_, norm_, r);
  return p.empty() ? 0.0 : area(p, norm_);
}

double GridOracle::plaquette_perimeter(double r) const {
  return perimeter_phi(plaquette(domain_, norm_, r), norm_);
}

// local bisection of r^2 |W| + (j-1) v(r) = target on a bracketing interval
double GridOracle::refine_root(double target, int j, double rlo, double rhi) const {
  auto g = [&](double r) { return r * r * wulff_area_ + (j - 1) * v(r) - target; };
  double lo = rlo, hi = rhi, glo = g(rlo);
  for (int it = 0; it < 80 && hi - lo > 1e-14 * std::max(hi, 1.0); ++it) {
    double mid = 0.5 * (lo + hi);
    if ((g(mid) < 0.0) == (glo < 0.0))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

OracleReport GridOracle::min_energy(double m) const {
  OracleReport report;
  report.grid_resolution = grid_n_;
  if (!(m > 0.0)) throw std::invalid_argument("GridOracle: mass must be positive");

  double best = std::numeric_limits<double>::infinity();
  auto consider = [&](double e, TowerCase c, int j, double r) {
    if (e < best) {
      best = e;
      report.tower_case = c;
      report.j = j;
      report.r = r;
    }
  };

  const int j_lo = std::max(1, static_cast<int>(std::ceil(m / area_omega_ - 1e-9)));
  const int j_hi = static_cast<int>(std::ceil(m / mass_ball_)) + 1;
  const double flat_tol = 1e-9 * std::max(m, 1.0);

  for (int j = j_lo; j <= j_hi; ++j) {
    // Case A: j identical plaquettes
    const double target = m / j;
    if (target >= mass_top_ * (1.0 - 1e-12) && target <= area_omega_ * (1.0 + 1e-12)) {
      double r;
      if (target >= area_omega_ * (1.0 - 1e-12)) {
        r = r_cond_;
      } else {
        // vgrid is nonincreasing: binary search for the bracket, then refine
        auto it = std::lower_bound(vgrid_.begin(), vgrid_.end(), target,
                                   [](double a, double b) { return a > b; });
        std::size_t k = std::min<std::size_t>(it - vgrid_.begin(), vgrid_.size() - 1);
        double lo = rgrid_[k > 0 ? k - 1 : 0], hi = rgrid_[k];
        for (int i = 0; i < 80 && hi - lo > 1e-14 * std::max(hi, 1.0); ++i) {
          double mid = 0.5 * (lo + hi);
          if (v(mid) >= target)
            lo = mid;
          else
            hi = mid;
        }
        r = 0.5 * (lo + hi);
      }
      consider(j * plaquette_perimeter(r), TowerCase::A, j, r);
    }

    // Case B: j-1 plaquettes plus a Wulff ball, all of radius r
    double prev = rgrid_[0] * rgrid_[0] * wulff_area_ + (j - 1) * vgrid_[0] - m;
    for (int k = 1; k <= grid_n_; ++k) {
      double curr = rgrid_[k] * rgrid_[k] * wulff_area_ + (j - 1) * vgrid_[k] - m;
      double root = std::numeric_limits<double>::quiet_NaN();
      if ((prev < 0.0) != (curr < 0.0))
        root = refine_root(m, j, rgrid_[k - 1], rgrid_[k]);
      else if (std::abs(curr) <= flat_tol)
        root = rgrid_[k];
      if (!std::isnan(root) && root > r_cond_ + 1e-15)
        consider((j - 1) * plaquette_perimeter(root) + 2.0 * root * wulff_area_,
                 TowerCase::B, j, root);
      prev = curr;
    }

    // Case C: j-1 full domains plus a ball of radius r <= r_Omega
    if (r_cond_ > 1e-14 * R_) {
      double lo = 0.0, hi = r_cond_;
      auto mass_c = [&](double r) { return r * r * wulff_area_ + (j - 1) * area_omega_; };
      if (mass_c(lo) <= m && m <= mass_c(hi) * (1.0 + 1e-12)) {
        for (int i = 0; i < 80 && hi - lo > 1e-14 * std::max(hi, 1.0); ++i) {
          double mid = 0.5 * (lo + hi);
          if (mass_c(mid) <= m)
            lo = mid;
          else
            hi = mid;
        }
        double r = 0.5 * (lo + hi);
        if (r > 0.0)
          consider((j - 1) * perim_omega_ + 2.0 * r * wulff_area_, TowerCase::C, j, r);
      }
    }

    // Case D: j stadiums; total center length found by bisection, energy
    // summed from the constructed layers
    if (seg_len_ > 0.0) {
      double t_max = j * seg_len_;
      auto mass_d = [&](double t) { return j * mass_ball_ + 2.0 * R_ * seg_h_ * t; };
      if (m >= mass_d(0.0) * (1.0 - 1e-12) && m <= mass_d(t_max) * (1.0 + 1e-12)) {
        double lo = 0.0, hi = t_max;
        for (int i = 0; i < 80 && hi - lo > 1e-14 * std::max(hi, 1.0); ++i) {
          double mid = 0.5 * (lo + hi);
          if (mass_d(mid) <= m)
            lo = mid;
          else
            hi = mid;
        }
        double total = 0.5 * (lo + hi);
        double e = 0.0;
        for (int i = 0; i < j; ++i) {
          double ell = std::clamp(total, 0.0, seg_len_);
          total -= ell;
          e += 2.0 * ell * seg_h_ + 2.0 * R_ * wulff_area_;
        }
        consider(e, TowerCase::D, j, R_);
      }
    }
  }

  report.best_energy = best;
  return report;
}

OracleReport grid_min_energy(const ProblemSpec& spec, int grid_n) {
  GridOracle oracle(spec.domain, spec.norm, grid_n);
  OracleReport report = oracle.min_energy(spec.m);
  report.discrepancy = report.best_energy - solve_tower(spec).energy;
  return report;
}

std::pair<double, double> discretized_measure(const RoundedRegion& region,
                                              const Norm& norm, int segments) {
  if (segments < 64) throw std::invalid_argument("discretized_measure: segments < 64");
  ConvexPolygon poly = discretize(region, norm, segments);
  return {poly.area(), perimeter_phi(poly, norm)};
}

}  // namespace wulff
