#include "wulff/isoperimetric.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "wulff/config.hpp"

namespace wulff {

double bisection_tolerance() {
  static const double tol = [] {
    if (const char* env = std::getenv("WULFF_TOWERS_TOL")) {
      double v = std::atof(env);
      if (v > 0.0) return v;
    }
    return 1e-12;
  }();
  return tol;
}

namespace {

// Root of area(plaquette(domain, r)) = m on [rlo, rhi]; the map is
// nonincreasing in r.  Plain bisection: v(r) is only piecewise smooth.
double plaquette_mass_radius(const RoundedRegion& domain, const Norm& norm,
                             double m, double rlo, double rhi) {
  double lo = rlo, hi = rhi;
  for (int it = 0; it < 100 && hi - lo > bisection_tolerance() * std::max(hi, 1.0);
       ++it) {
    double mid = 0.5 * (lo + hi);
    RoundedRegion p = plaquette(domain, norm, mid);
    double a = p.empty() ? 0.0 : area(p, norm);
    if (a >= m)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

IsoperimetricSolution solve_isoperimetric(const RoundedRegion& domain,
                                          const Norm& norm, double m) {
  if (domain.empty()) throw std::invalid_argument("solve_isoperimetric: empty domain");
  const double total = area(domain, norm);
  if (!(m > 0.0)) throw std::invalid_argument("solve_isoperimetric: mass must be positive");
  if (m > total * (1.0 + 1e-9))
    throw std::invalid_argument("solve_isoperimetric: mass exceeds domain area");
  m = std::min(m, total);

  const InscribedBall ball = max_inscribed_radius(domain, norm);
  const double R = ball.radius;
  const double wa = norm.wulff_area();
  const double mass_ball_max = R * R * wa;                       // full inscribed ball
  RoundedRegion top = plaquette(domain, norm, R);
  const double mass_plaquette_min = area(top, norm);             // |Omega^R|

  IsoperimetricSolution sol;
  if (m >= mass_plaquette_min * (1.0 - 1e-12) && m > mass_ball_max * (1.0 + 1e-12)) {
    // Wulff plaquette Omega^{r_m}
    const double r_lo = rw_condition_radius(domain, norm);
    double r = m >= total * (1.0 - 1e-12)
                   ? r_lo
                   : plaquette_mass_radius(domain, norm, m, r_lo, R);
    sol.kind = IsoCase::Plaquette;
    sol.r = r;
    sol.shape = plaquette(domain, norm, r);
    sol.unique = true;
  } else if (m > mass_ball_max * (1.0 + 1e-12)) {
    // stadium: sub-segment of the inscribed-ball center segment, dilated by R
    const auto& seg = ball.center_set.vertices();
    if (seg.size() != 2)
      throw std::logic_error("solve_isoperimetric: stadium window without center segment");
    Vec2 a = seg[0], b = seg[1];
    const double L = distance(a, b);
    Vec2 u = (b - a) * (1.0 / L);
    const double h = norm.support(outward_normal(u));  // support at segment normal
    double ell = (m - mass_ball_max) / (2.0 * R * h);
    ell = std::min(ell, L);
    Vec2 mid = (a + b) * 0.5;
    sol.kind = IsoCase::Stadium;
    sol.r = R;
    sol.shape = {ConvexPolygon::segment(mid - u * (0.5 * ell), mid + u * (0.5 * ell)), R};
    sol.unique = ell >= L * (1.0 - 1e-9);
    sol.center_freedom = ball.center_set;
  } else {
    // single Wulff ball
    const double r = std::sqrt(m / wa);
    Vec2 center = ball.center_set.vertex_centroid();
    sol.kind = IsoCase::Ball;
    sol.r = r;
    sol.shape = {ConvexPolygon::point(center), r};
    sol.center_freedom = erode(domain, norm, r).core;
    sol.unique = sol.center_freedom.size() <= 1 &&
                 sol.center_freedom.diameter() <= 1e-9 * std::max(1.0, R);
  }
  sol.perimeter = perimeter_phi(sol.shape, norm);
  return sol;
}

std::vector<IsoperimetricSolution> nested_family(const RoundedRegion& domain,
                                                 const Norm& norm,
                                                 const std::vector<double>& masses) {
  for (std::size_t i = 1; i < masses.size(); ++i)
    if (!(masses[i] < masses[i - 1]))
      throw std::invalid_argument("nested_family: masses must be strictly descending");

  std::vector<IsoperimetricSolution> out;
  out.reserve(masses.size());
  for (double m : masses) out.push_back(solve_isoperimetric(domain, norm, m));

  // Canonical representatives share the center-set midpoint, so nesting only
  // needs verification.
  const double tol = 1e-7 * std::max(1.0, domain.diameter(norm));
  for (std::size_t i = 1; i < out.size(); ++i)
    if (!region_contains(out[i - 1].shape, out[i].shape, norm, tol))
      throw std::logic_error("nested_family: canonical representatives fail to nest");
  return out;
}

}  // namespace wulff
