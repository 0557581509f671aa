#include "wulff/tower.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "wulff/config.hpp"

namespace wulff {

std::string to_string(TowerCase c) {
  switch (c) {
    case TowerCase::A: return "A";
    case TowerCase::B: return "B";
    case TowerCase::C: return "C";
    case TowerCase::D: return "D";
    default: return "-";
  }
}

namespace {

constexpr int kBracketGrid = 1024;  // bracket grid for the case-B mass equation

struct Candidate {
  TowerCase tower_case = TowerCase::None;
  int j = 0;
  double r = 0.0;
  double energy = std::numeric_limits<double>::infinity();
  bool family = false;  // whole r-interval of co-minimal solutions (exact ties)
};

int case_rank(TowerCase c) { return static_cast<int>(c); }

struct Context {
  const RoundedRegion& domain;
  const Norm& norm;
  double area_omega;
  double perim_omega;
  double wulff_area;
  double R;                   // anisotropic inradius
  ConvexPolygon centers;      // center set at radius R (point or segment)
  double r_cond;              // r_Omega
  double mass_top;            // |Omega^R|
  double mass_ball;           // R^2 |W|
  double seg_len = 0.0;       // center-segment length (0 for a point)
  double seg_h = 0.0;         // phi* at the segment normal
  Vec2 seg_dir{1.0, 0.0};
  std::vector<double> rgrid, vgrid;  // v(r) samples on [r_cond, R]

  explicit Context(const RoundedRegion& dom, const Norm& n) : domain(dom), norm(n) {
    area_omega = area(domain, norm);
    perim_omega = perimeter_phi(domain, norm);
    wulff_area = norm.wulff_area();
    InscribedBall ball = max_inscribed_radius(domain, norm);
    R = ball.radius;
    centers = std::move(ball.center_set);
    r_cond = rw_condition_radius(domain, norm);
    mass_top = area(plaquette(domain, norm, R), norm);
    mass_ball = R * R * wulff_area;
    if (centers.size() == 2) {
      Vec2 a = centers.vertices()[0], b = centers.vertices()[1];
      seg_len = distance(a, b);
      seg_dir = (b - a) * (1.0 / seg_len);
      seg_h = norm.support(outward_normal(seg_dir));
    }

    rgrid.resize(kBracketGrid + 1);
    vgrid.resize(kBracketGrid + 1);
    for (int k = 0; k <= kBracketGrid; ++k) {
      double r = r_cond + (R - r_cond) * static_cast<double>(k) / kBracketGrid;
      rgrid[k] = r;
      vgrid[k] = v(r);
    }
    vgrid.back() = mass_top;  // erode at R is nonempty by construction
  }

  double v(double r) const {
    RoundedRegion p = plaquette(domain, norm, r);
    return p.empty() ? 0.0 : area(p, norm);
  }

  double plaquette_perimeter(double r) const {
    return perimeter_phi(plaquette(domain, norm, r), norm);
  }

  // bisection for v(r) = target (v nonincreasing) on [rlo, rhi]
  double invert_mass(double target, double rlo, double rhi) const {
    double lo = rlo, hi = rhi;
    for (int it = 0;
         it < 100 && hi - lo > bisection_tolerance() * std::max(hi, 1.0); ++it) {
      double mid = 0.5 * (lo + hi);
      if (v(mid) >= target)
        lo = mid;
      else
        hi = mid;
    }
    return 0.5 * (lo + hi);
  }
};

void case_a_candidates(const Context& ctx, double m, int j, std::vector<Candidate>& out) {
  const double lo_mass = j * ctx.mass_top;
  const double hi_mass = j * ctx.area_omega;
  if (m < lo_mass * (1.0 - 1e-12) || m > hi_mass * (1.0 + 1e-12)) return;
  double r = m >= hi_mass * (1.0 - 1e-12)
                 ? ctx.r_cond
                 : ctx.invert_mass(std::min(m / j, ctx.area_omega), ctx.r_cond, ctx.R);
  Candidate c;
  c.tower_case = TowerCase::A;
  c.j = j;
  c.r = r;
  c.energy = j * ctx.plaquette_perimeter(r);
  out.push_back(c);
}

void case_b_candidates(const Context& ctx, double m, int j, std::vector<Candidate>& out) {
  auto g = [&](double r) { return r * r * ctx.wulff_area + (j - 1) * ctx.v(r) - m; };
  auto g_grid = [&](int k) {
    return ctx.rgrid[k] * ctx.rgrid[k] * ctx.wulff_area + (j - 1) * ctx.vgrid[k] - m;
  };
  auto energy_at = [&](double r) {
    return (j - 1) * ctx.plaquette_perimeter(r) + 2.0 * r * ctx.wulff_area;
  };

  const double flat_tol = 1e-9 * std::max(m, 1.0);
  double max_abs = 0.0;
  for (int k = 0; k <= kBracketGrid; ++k) max_abs = std::max(max_abs, std::abs(g_grid(k)));
  if (max_abs <= flat_tol && ctx.R > ctx.r_cond) {
    // the mass equation holds identically: a one-parameter family of minimizers
    Candidate c;
    c.tower_case = TowerCase::B;
    c.j = j;
    c.r = 0.5 * (ctx.r_cond + ctx.R);
    c.energy = energy_at(c.r);
    c.family = true;
    out.push_back(c);
    return;
  }

  Candidate best;
  double prev = g_grid(0);
  for (int k = 1; k <= kBracketGrid; ++k) {
    double curr = g_grid(k);
    double root = std::numeric_limits<double>::quiet_NaN();
    if ((prev < 0.0) != (curr < 0.0)) {
      double lo = ctx.rgrid[k - 1], hi = ctx.rgrid[k];
      double glo = g(lo);
      for (int it = 0;
           it < 100 && hi - lo > bisection_tolerance() * std::max(hi, 1.0); ++it) {
        double mid = 0.5 * (lo + hi);
        if ((g(mid) < 0.0) == (glo < 0.0))
          lo = mid;
        else
          hi = mid;
      }
      root = 0.5 * (lo + hi);
    } else if (std::abs(curr) <= flat_tol) {
      root = ctx.rgrid[k];
    }
    if (!std::isnan(root) && root > ctx.r_cond * (1.0 + 1e-12) + 1e-15) {
      double e = energy_at(root);
      if (e < best.energy) {
        best.tower_case = TowerCase::B;
        best.j = j;
        best.r = root;
        best.energy = e;
      }
    }
    prev = curr;
  }
  if (best.tower_case == TowerCase::B) out.push_back(best);
}

void case_c_candidates(const Context& ctx, double m, int j, std::vector<Candidate>& out) {
  if (ctx.r_cond <= 1e-14 * ctx.R) return;
  double rad2 = (m - (j - 1) * ctx.area_omega) / ctx.wulff_area;
  if (rad2 <= 0.0) return;
  double r = std::sqrt(rad2);
  if (r > ctx.r_cond * (1.0 + 1e-12)) return;
  r = std::min(r, ctx.r_cond);
  Candidate c;
  c.tower_case = TowerCase::C;
  c.j = j;
  c.r = r;
  c.energy = (j - 1) * ctx.perim_omega + 2.0 * r * ctx.wulff_area;
  out.push_back(c);
}

void case_d_candidates(const Context& ctx, double m, int j, std::vector<Candidate>& out) {
  if (ctx.seg_len <= 0.0) return;
  const double lo = j * ctx.mass_ball;
  const double hi = j * (ctx.mass_ball + 2.0 * ctx.R * ctx.seg_h * ctx.seg_len);
  if (m < lo * (1.0 - 1e-12) || m > hi * (1.0 + 1e-12)) return;
  Candidate c;
  c.tower_case = TowerCase::D;
  c.j = j;
  c.r = ctx.R;
  c.energy = j * ctx.R * ctx.wulff_area + m / ctx.R;
  out.push_back(c);
}

std::vector<LayerShape> build_layers(const Context& ctx, const Candidate& win, double m) {
  std::vector<LayerShape> layers;
  layers.reserve(static_cast<std::size_t>(win.j));
  switch (win.tower_case) {
    case TowerCase::A: {
      RoundedRegion shape = plaquette(ctx.domain, ctx.norm, win.r);
      bool full = win.r <= ctx.r_cond * (1.0 + 1e-12) + 1e-15;
      for (int i = 0; i < win.j; ++i)
        layers.push_back({full ? LayerShape::Kind::FullDomain : LayerShape::Kind::Plaquette,
                          shape, win.r});
      break;
    }
    case TowerCase::B: {
      RoundedRegion shape = plaquette(ctx.domain, ctx.norm, win.r);
      for (int i = 0; i < win.j - 1; ++i)
        layers.push_back({LayerShape::Kind::Plaquette, shape, win.r});
      Vec2 center = erode(ctx.domain, ctx.norm, win.r).core.vertex_centroid();
      layers.push_back(
          {LayerShape::Kind::WulffBall, {ConvexPolygon::point(center), win.r}, win.r});
      break;
    }
    case TowerCase::C: {
      for (int i = 0; i < win.j - 1; ++i)
        layers.push_back({LayerShape::Kind::FullDomain, ctx.domain, ctx.r_cond});
      Vec2 center = erode(ctx.domain, ctx.norm, win.r).core.vertex_centroid();
      layers.push_back(
          {LayerShape::Kind::WulffBall, {ConvexPolygon::point(center), win.r}, win.r});
      break;
    }
    case TowerCase::D: {
      // greedy bottom-filling: any nonincreasing length split is optimal
      double remaining = (m - win.j * ctx.mass_ball) / (2.0 * ctx.R * ctx.seg_h);
      Vec2 mid = ctx.centers.vertex_centroid();
      for (int i = 0; i < win.j; ++i) {
        double ell = std::clamp(remaining, 0.0, ctx.seg_len);
        remaining -= ell;
        ConvexPolygon core =
            ell > 1e-14 * ctx.seg_len
                ? ConvexPolygon::segment(mid - ctx.seg_dir * (0.5 * ell),
                                         mid + ctx.seg_dir * (0.5 * ell))
                : ConvexPolygon::point(mid);
        layers.push_back({LayerShape::Kind::Stadium, {std::move(core), ctx.R}, ctx.R});
      }
      break;
    }
    default:
      break;
  }
  return layers;
}

}  // namespace

TowerProfile solve_tower(const ProblemSpec& spec) {
  if (spec.domain.empty()) throw std::invalid_argument("solve_tower: empty domain");
  if (!(spec.m >= 0.0) || !std::isfinite(spec.m))
    throw std::invalid_argument("solve_tower: mass must be finite and nonnegative");

  TowerProfile profile;
  if (spec.m == 0.0) return profile;

  Context ctx(spec.domain, spec.norm);
  if (ctx.area_omega <= 0.0)
    throw std::invalid_argument("solve_tower: domain has zero area");

  const double m = spec.m;
  const int j_lo = std::max(1, static_cast<int>(std::ceil(m / ctx.area_omega - 1e-9)));
  const int j_hi = static_cast<int>(std::ceil(m / ctx.mass_ball)) + 1;

  std::vector<Candidate> candidates;
  for (int j = j_lo; j <= j_hi; ++j) {
    case_a_candidates(ctx, m, j, candidates);
    case_b_candidates(ctx, m, j, candidates);
    case_c_candidates(ctx, m, j, candidates);
    case_d_candidates(ctx, m, j, candidates);
  }
  if (candidates.empty())
    throw std::logic_error("solve_tower: no feasible candidate family");

  double e_min = std::numeric_limits<double>::infinity();
  for (const Candidate& c : candidates) e_min = std::min(e_min, c.energy);
  const double tie_tol = 1e-9 * std::max(e_min, 1.0);

  std::vector<Candidate> tied;
  for (const Candidate& c : candidates)
    if (c.energy <= e_min + tie_tol) tied.push_back(c);
  std::sort(tied.begin(), tied.end(), [](const Candidate& a, const Candidate& b) {
    if (a.j != b.j) return a.j < b.j;
    return case_rank(a.tower_case) < case_rank(b.tower_case);
  });
  const Candidate& win = tied.front();

  profile.tower_case = win.tower_case;
  profile.j_max = win.j;
  profile.r_bar = win.r;
  profile.energy = win.energy;
  profile.layers = build_layers(ctx, win, m);
  profile.mass = 0.0;
  for (const LayerShape& l : profile.layers) profile.mass += area(l.region, spec.norm);
  for (std::size_t i = 1; i < tied.size(); ++i)
    profile.ties.push_back({tied[i].tower_case, tied[i].j, tied[i].r, tied[i].energy});
  return profile;
}

std::vector<TowerProfile> energy_curve(const RoundedRegion& domain, const Norm& norm,
                                       const std::vector<double>& masses) {
  std::vector<TowerProfile> out;
  out.reserve(masses.size());
  for (double m : masses) {
    if (m < 0.0) throw std::invalid_argument("energy_curve: negative mass");
    out.push_back(solve_tower({domain, norm, m}));
  }
  // monotonicity in m (checked on a mass-sorted view of the results)
  std::vector<std::size_t> order(out.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return masses[a] < masses[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    double e0 = out[order[i - 1]].energy, e1 = out[order[i]].energy;
    if (e1 < e0 - 1e-7 * std::max(1.0, e0))
      throw std::logic_error("energy_curve: energy not nondecreasing in mass");
  }
  return out;
}

CheegerResult cheeger_limit(const RoundedRegion& domain, const Norm& norm) {
  if (domain.empty()) throw std::invalid_argument("cheeger_limit: empty domain");
  Context ctx(domain, norm);
  auto q = [&](double r) { return ctx.plaquette_perimeter(r) / ctx.v(r); };

  // Function-value search (golden section) stalls at sqrt(eps) on the flat
  // minimum; bisecting the sign of a central-difference derivative reaches
  // full precision because q is piecewise smooth in r.
  const double h = 1e-6 * std::max(ctx.R, 1.0);
  auto slope_sign = [&](double r) { return q(r + h) - q(r - h); };
  double lo = ctx.r_cond + 2.0 * h, hi = ctx.R - 2.0 * h;
  if (lo >= hi) {
    double r = std::clamp(0.5 * (ctx.r_cond + ctx.R), ctx.r_cond, ctx.R);
    return {r, plaquette(domain, norm, r)};
  }
  double r;
  if (slope_sign(lo) >= 0.0) {
    r = ctx.r_cond;
  } else if (slope_sign(hi) <= 0.0) {
    r = ctx.R;
  } else {
    for (int it = 0; it < 200 && hi - lo > 1e-12 * std::max(ctx.R, 1.0); ++it) {
      double mid = 0.5 * (lo + hi);
      if (slope_sign(mid) < 0.0)
        lo = mid;
      else
        hi = mid;
    }
    r = 0.5 * (lo + hi);
  }
  return {r, plaquette(domain, norm, r)};
}

}  // namespace wulff
