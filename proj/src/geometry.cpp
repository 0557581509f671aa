#include "wulff/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wulff {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kCleanTol = 1e-12;  // relative vertex-coincidence tolerance

double chain_scale(const std::vector<Vec2>& v) {
  if (v.empty()) return 0.0;
  double xmin = v[0].x, xmax = v[0].x, ymin = v[0].y, ymax = v[0].y;
  for (const Vec2& p : v) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  return std::hypot(xmax - xmin, ymax - ymin);
}

double shoelace(const std::vector<Vec2>& v) {
  if (v.size() < 3) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec2& a = v[i];
    const Vec2& b = v[(i + 1) % v.size()];
    s += cross(a, b);
  }
  return 0.5 * s;
}

// Farthest pair, used only on small or degenerate chains.
std::pair<Vec2, Vec2> farthest_pair(const std::vector<Vec2>& v) {
  std::pair<Vec2, Vec2> best{v[0], v[0]};
  double d2 = -1.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      Vec2 d = v[j] - v[i];
      double q = dot(d, d);
      if (q > d2) {
        d2 = q;
        best = {v[i], v[j]};
      }
    }
  return best;
}

// Normalize a vertex chain: drop coincident and collinear vertices, collapse
// thin slivers to segments/points, and verify convex counterclockwise order.
std::vector<Vec2> clean_chain(std::vector<Vec2> v, double scale_hint) {
  if (v.empty()) return v;
  // Rounding error in the coordinates scales with their magnitude, not with
  // the chain extent: a thin sliver far from the origin (or the residue of a
  // near-total erosion) has area below shoelace noise.
  double cmax = 0.0;
  for (const Vec2& p : v) cmax = std::max(cmax, std::hypot(p.x, p.y));
  const double extent = std::max(chain_scale(v), 1e-300);
  const double scale = std::max({extent, cmax, scale_hint});
  const double tol = kCleanTol * std::max(scale, 1e-300);

  // coincident vertices (cyclic)
  std::vector<Vec2> w;
  w.reserve(v.size());
  for (const Vec2& p : v) {
    if (w.empty() || distance(w.back(), p) > tol) w.push_back(p);
  }
  while (w.size() > 1 && distance(w.front(), w.back()) <= tol) w.pop_back();

  if (w.size() <= 2) return w;

  double a = shoelace(w);
  // The shoelace sum carries rounding noise of order eps * cmax^2 per term:
  // the zero-area band must cover it or near-collapsed slivers get rejected
  // as clockwise.
  const double area_eps = std::max(
      tol * extent, 1e-14 * cmax * cmax * static_cast<double>(w.size()));
  if (a < -area_eps)
    throw std::invalid_argument("ConvexPolygon: clockwise vertex chain");
  if (a <= area_eps) {
    // all vertices essentially on a line
    auto [p, q] = farthest_pair(w);
    if (distance(p, q) <= tol) return {p};
    Vec2 u = (q - p) * (1.0 / distance(p, q));
    double tmin = 0.0, tmax = 0.0, smid = 0.0;
    for (const Vec2& x : w) {
      tmin = std::min(tmin, dot(x - p, u));
      tmax = std::max(tmax, dot(x - p, u));
      smid += cross(u, x - p);
    }
    smid /= static_cast<double>(w.size());
    Vec2 n{-u.y, u.x};
    return {p + u * tmin + n * smid, p + u * tmax + n * smid};
  }

  // collinear vertices
  bool changed = true;
  while (changed && w.size() > 2) {
    changed = false;
    std::vector<Vec2> out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Vec2& prev = w[(i + w.size() - 1) % w.size()];
      const Vec2& cur = w[i];
      const Vec2& next = w[(i + 1) % w.size()];
      // deviation of cur from the line prev-next, not the raw cross product:
      // a genuine corner between two short edges must survive cleaning
      double c = cross(cur - prev, next - cur);
      if (std::abs(c) <= tol * distance(prev, next) &&
          dot(cur - prev, next - cur) >= 0.0) {
        changed = true;
        continue;
      }
      out.push_back(cur);
    }
    w = std::move(out);
  }
  if (w.size() <= 2) return w;

  for (std::size_t i = 0; i < w.size(); ++i) {
    const Vec2& prev = w[(i + w.size() - 1) % w.size()];
    const Vec2& cur = w[i];
    const Vec2& next = w[(i + 1) % w.size()];
    if (cross(cur - prev, next - cur) < -tol * distance(prev, next))
      throw std::invalid_argument("ConvexPolygon: vertex chain is not convex");
  }
  return w;
}

std::vector<Vec2> clip_halfplane(const std::vector<Vec2>& poly, Vec2 n, double c) {
  std::vector<Vec2> out;
  out.reserve(poly.size() + 1);
  const std::size_t k = poly.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Vec2& cur = poly[i];
    const Vec2& nxt = poly[(i + 1) % k];
    double dc = dot(cur, n) - c;
    double dn = dot(nxt, n) - c;
    if (dc <= 0.0) out.push_back(cur);
    if ((dc < 0.0 && dn > 0.0) || (dc > 0.0 && dn < 0.0)) {
      double t = dc / (dc - dn);
      out.push_back(cur + (nxt - cur) * t);
    }
  }
  return out;
}

}  // namespace

double length(Vec2 v) { return std::hypot(v.x, v.y); }
double distance(Vec2 a, Vec2 b) { return length(a - b); }

ConvexPolygon::ConvexPolygon(std::vector<Vec2> vertices)
    : verts_(clean_chain(std::move(vertices), 0.0)) {}

ConvexPolygon ConvexPolygon::point(Vec2 p) { return ConvexPolygon({p}); }

ConvexPolygon ConvexPolygon::segment(Vec2 a, Vec2 b) { return ConvexPolygon({a, b}); }

ConvexPolygon ConvexPolygon::rectangle(double width, double height) {
  if (width <= 0.0 || height <= 0.0)
    throw std::invalid_argument("rectangle: nonpositive side");
  return ConvexPolygon({{0.0, 0.0}, {width, 0.0}, {width, height}, {0.0, height}});
}

ConvexPolygon ConvexPolygon::regular(int sides, double circumradius) {
  if (sides < 3) throw std::invalid_argument("regular: need at least 3 sides");
  std::vector<Vec2> v;
  v.reserve(static_cast<std::size_t>(sides));
  for (int i = 0; i < sides; ++i) {
    double t = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(sides);
    v.push_back({circumradius * std::cos(t), circumradius * std::sin(t)});
  }
  return ConvexPolygon(std::move(v));
}

double ConvexPolygon::area() const { return shoelace(verts_); }

double ConvexPolygon::diameter() const {
  if (verts_.empty()) return 0.0;
  if (verts_.size() > 256) return chain_scale(verts_);
  auto [p, q] = farthest_pair(verts_);
  return distance(p, q);
}

Vec2 ConvexPolygon::vertex_centroid() const {
  Vec2 c;
  if (verts_.empty()) return c;
  for (const Vec2& v : verts_) c = c + v;
  return c * (1.0 / static_cast<double>(verts_.size()));
}

bool ConvexPolygon::contains(Vec2 p, double tol) const {
  if (verts_.empty()) return false;
  if (verts_.size() == 1) return distance(p, verts_[0]) <= tol;
  if (verts_.size() == 2) {
    Vec2 d = verts_[1] - verts_[0];
    double len = length(d);
    double t = std::clamp(dot(p - verts_[0], d) / (len * len), 0.0, 1.0);
    return distance(p, verts_[0] + d * t) <= tol;
  }
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    Vec2 e = verts_[(i + 1) % verts_.size()] - verts_[i];
    if (cross(e, p - verts_[i]) < -tol * length(e)) return false;
  }
  return true;
}

ConvexPolygon ConvexPolygon::translated(Vec2 t) const {
  std::vector<Vec2> v = verts_;
  for (Vec2& p : v) p = p + t;
  ConvexPolygon out;
  out.verts_ = std::move(v);
  return out;
}

ConvexPolygon ConvexPolygon::scaled(double s) const {
  if (s <= 0.0) throw std::invalid_argument("scaled: nonpositive factor");
  std::vector<Vec2> v = verts_;
  for (Vec2& p : v) p = p * s;
  ConvexPolygon out;
  out.verts_ = std::move(v);
  return out;
}

ConvexPolygon convex_hull(std::vector<Vec2> pts) {
  if (pts.size() <= 1) return ConvexPolygon(std::move(pts));
  std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }),
            pts.end());
  const std::size_t n = pts.size();
  if (n <= 2) return ConvexPolygon(std::move(pts));
  std::vector<Vec2> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower
    while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0.0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper
    while (k >= t && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0.0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return ConvexPolygon(std::move(h));
}

namespace {

// Rotate the chain so it starts at the bottommost (then leftmost) vertex.
std::vector<Vec2> bottom_start(const std::vector<Vec2>& v) {
  std::size_t s = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i].y < v[s].y || (v[i].y == v[s].y && v[i].x < v[s].x)) s = i;
  std::vector<Vec2> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[(s + i) % v.size()];
  return out;
}

// Edge vectors with monotonically increasing direction angles (lifted past
// the atan2 branch cut).  Works for segments (two antiparallel edges).
std::vector<std::pair<double, Vec2>> edge_fan(const std::vector<Vec2>& v) {
  std::vector<std::pair<double, Vec2>> e;
  const std::size_t k = v.size();
  e.reserve(k);
  double prev = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < k; ++i) {
    Vec2 d = v[(i + 1) % k] - v[i];
    double a = std::atan2(d.y, d.x);
    if (a < -1e-9 && i == 0) a += 2.0 * kPi;  // start edge angle lies in [0, pi)
    while (a < prev - 1e-9) a += 2.0 * kPi;
    prev = std::max(prev, a);
    e.push_back({a, d});
  }
  return e;
}

}  // namespace

ConvexPolygon minkowski_sum(const ConvexPolygon& a, const ConvexPolygon& b) {
  if (a.empty() || b.empty()) return {};
  if (a.size() == 1) return b.translated(a.vertices()[0]);
  if (b.size() == 1) return a.translated(b.vertices()[0]);

  std::vector<Vec2> va = bottom_start(a.vertices());
  std::vector<Vec2> vb = bottom_start(b.vertices());
  auto ea = edge_fan(va);
  auto eb = edge_fan(vb);

  std::vector<Vec2> out;
  out.reserve(ea.size() + eb.size() + 1);
  Vec2 cur = va[0] + vb[0];
  out.push_back(cur);
  std::size_t i = 0, j = 0;
  while (i < ea.size() || j < eb.size()) {
    Vec2 step;
    if (j >= eb.size() || (i < ea.size() && ea[i].first <= eb[j].first))
      step = ea[i++].second;
    else
      step = eb[j++].second;
    cur = cur + step;
    out.push_back(cur);
  }
  out.pop_back();  // chain closes on the start point
  return ConvexPolygon(std::move(out));
}

// ---------------------------------------------------------------------------
// Norm

Norm Norm::euclidean() {
  Norm n;
  n.euclidean_ = true;
  n.wulff_area_ = kPi;
  return n;
}

Norm Norm::wulff_polygon(std::vector<Vec2> vertices) {
  Norm n;
  n.wulff_ = ConvexPolygon(std::move(vertices));
  const auto& v = n.wulff_.vertices();
  if (v.size() < 4)
    throw std::invalid_argument("Norm: Wulff polygon needs at least 4 vertices");
  const double tol = kCleanTol * n.wulff_.diameter();
  for (const Vec2& p : v) {
    bool found = false;
    for (const Vec2& q : v)
      if (distance(q, -p) <= tol) {
        found = true;
        break;
      }
    if (!found)
      throw std::invalid_argument("Norm: Wulff polygon is not centrally symmetric");
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    Vec2 e = v[(i + 1) % v.size()] - v[i];
    Vec2 nrm = outward_normal(e) * (1.0 / length(e));
    double h = dot(v[i], nrm);
    if (h <= tol)
      throw std::invalid_argument("Norm: origin not interior to Wulff polygon");
    n.facet_normals_.push_back(nrm);
    n.facet_offsets_.push_back(h);
  }
  n.wulff_area_ = n.wulff_.area();
  return n;
}

Norm Norm::l1() {
  return wulff_polygon({{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}});
}

double Norm::gauge(Vec2 v) const {
  if (euclidean_) return length(v);
  double g = 0.0;
  for (std::size_t i = 0; i < facet_normals_.size(); ++i)
    g = std::max(g, dot(v, facet_normals_[i]) / facet_offsets_[i]);
  return g;
}

double Norm::support(Vec2 v) const {
  if (euclidean_) return length(v);
  double s = -std::numeric_limits<double>::infinity();
  for (const Vec2& w : wulff_.vertices()) s = std::max(s, dot(v, w));
  return s;
}

ConvexPolygon Norm::wulff_shape(int segments) const {
  if (euclidean_) return ConvexPolygon::regular(std::max(segments, 8), 1.0);
  return wulff_;
}

// ---------------------------------------------------------------------------
// RoundedRegion measures

double perimeter_phi(const ConvexPolygon& poly, const Norm& norm) {
  const auto& v = poly.vertices();
  if (v.size() <= 1) return 0.0;
  if (v.size() == 2) return 2.0 * norm.support(outward_normal(v[1] - v[0]));
  double p = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    p += norm.support(outward_normal(v[(i + 1) % v.size()] - v[i]));
  return p;
}

double perimeter_phi(const RoundedRegion& region, const Norm& norm) {
  if (region.empty()) return 0.0;
  return perimeter_phi(region.core, norm) + region.rho * norm.wulff_perimeter();
}

double area(const RoundedRegion& region, const Norm& norm) {
  if (region.empty()) return 0.0;
  return region.core.area() + region.rho * perimeter_phi(region.core, norm) +
         region.rho * region.rho * norm.wulff_area();
}

double RoundedRegion::diameter(const Norm& norm) const {
  if (empty()) return 0.0;
  return core.diameter() + 2.0 * rho * norm.wulff_shape(64).diameter() * 0.5 +
         2.0 * rho;  // generous upper bound, used only for tolerance scales
}

// ---------------------------------------------------------------------------
// Erosion / plaquette

RoundedRegion erode(const RoundedRegion& region, const Norm& norm, double r) {
  if (r < 0.0) throw std::invalid_argument("erode: negative radius");
  if (region.empty() || r == 0.0) return region;
  if (r <= region.rho) return {region.core, region.rho - r};
  const double d = r - region.rho;
  if (region.core.is_degenerate()) return {};  // positive erosion of a thin set

  std::vector<Vec2> poly = region.core.vertices();
  const auto& v = region.core.vertices();
  for (std::size_t i = 0; i < v.size(); ++i) {
    Vec2 n = outward_normal(v[(i + 1) % v.size()] - v[i]);
    double c = dot(v[i], n) - d * norm.support(n);
    poly = clip_halfplane(poly, n, c);
    if (poly.empty()) return {};
  }
  ConvexPolygon core(std::move(poly));
  return {std::move(core), 0.0};
}

RoundedRegion plaquette(const RoundedRegion& region, const Norm& norm, double r) {
  if (r < 0.0) throw std::invalid_argument("plaquette: negative radius");
  if (r == 0.0 || region.empty()) return region;
  RoundedRegion inner = erode(region, norm, r);
  if (inner.empty()) return {};
  return {inner.core, inner.rho + r};
}

namespace {

ConvexPolygon collapse_to_degenerate(const ConvexPolygon& poly, double tol) {
  if (poly.size() <= 1) return poly;
  const auto& v = poly.vertices();
  auto [p, q] = farthest_pair(v);
  if (poly.size() == 2)
    return distance(p, q) <= tol ? ConvexPolygon::point(poly.vertex_centroid()) : poly;
  if (distance(p, q) <= tol) return ConvexPolygon::point(poly.vertex_centroid());
  Vec2 u = (q - p) * (1.0 / distance(p, q));
  Vec2 n{-u.y, u.x};
  double tmin = 0.0, tmax = 0.0, smid = 0.0;
  for (const Vec2& x : v) {
    tmin = std::min(tmin, dot(x - p, u));
    tmax = std::max(tmax, dot(x - p, u));
    smid += cross(u, x - p);
  }
  smid /= static_cast<double>(v.size());
  return ConvexPolygon::segment(p + u * tmin + n * smid, p + u * tmax + n * smid);
}

}  // namespace

InscribedBall max_inscribed_radius(const RoundedRegion& region, const Norm& norm) {
  if (region.empty())
    throw std::invalid_argument("max_inscribed_radius: empty region");
  const double scale = std::max(region.diameter(norm), 1e-12);

  double lo = region.rho;  // erosion by rho is always nonempty
  double hi = std::max(region.rho, scale * 1e-3);
  while (!erode(region, norm, hi).empty()) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
    double mid = 0.5 * (lo + hi);
    if (erode(region, norm, mid).empty())
      hi = mid;
    else
      lo = mid;
  }
  ConvexPolygon centers =
      collapse_to_degenerate(erode(region, norm, lo).core, 1e-7 * scale);
  return {lo, std::move(centers)};
}

double rw_condition_radius(const RoundedRegion& region, const Norm& norm) {
  if (region.empty()) throw std::invalid_argument("rw_condition_radius: empty region");
  if (region.core.is_degenerate()) return max_inscribed_radius(region, norm).radius;
  if (norm.is_euclidean()) return region.rho;  // polygon corners admit no disc

  // Crystalline norms can leave polygon corners intact: the largest d with
  // (core - dW) + dW = core is found by bisection on the monotone opening
  // identity, tested structurally on the vertex chains.
  const double scale = std::max(region.diameter(norm), 1e-12);
  const double tol = 1e-9 * scale;
  const ConvexPolygon& core = region.core;
  auto open_identity = [&](double d) {
    RoundedRegion er = erode({core, 0.0}, norm, d);
    if (er.empty()) return false;
    ConvexPolygon re = minkowski_sum(er.core, norm.wulff_shape().scaled(d));
    if (re.size() != core.size()) return false;
    for (const Vec2& p : core.vertices())
      if (!re.contains(p, tol)) return false;
    for (const Vec2& p : re.vertices())
      if (!core.contains(p, tol)) return false;
    return true;
  };

  double dmax = max_inscribed_radius({core, 0.0}, norm).radius;
  if (dmax <= tol) return region.rho;
  if (!open_identity(dmax * 1e-6)) return region.rho;
  double lo = dmax * 1e-6, hi = dmax;
  if (open_identity(hi)) return region.rho + hi;
  for (int it = 0; it < 80 && hi - lo > 1e-13 * dmax; ++it) {
    double mid = 0.5 * (lo + hi);
    if (open_identity(mid))
      lo = mid;
    else
      hi = mid;
  }
  return region.rho + lo;
}

double isoperimetric_deficit(const RoundedRegion& region, const Norm& norm) {
  if (region.empty()) throw std::invalid_argument("isoperimetric_deficit: empty region");
  double a = area(region, norm);
  return perimeter_phi(region, norm) - 2.0 * std::sqrt(a * norm.wulff_area());
}

// ---------------------------------------------------------------------------
// Discretization and containment

ConvexPolygon discretize(const RoundedRegion& region, const Norm& norm, int segments) {
  if (region.empty()) return {};
  if (region.rho == 0.0) return region.core;
  ConvexPolygon w = norm.wulff_shape(segments).scaled(region.rho);
  return minkowski_sum(region.core, w);
}

double gauge_distance(const ConvexPolygon& poly, const Norm& norm, Vec2 p) {
  if (poly.empty()) throw std::invalid_argument("gauge_distance: empty polygon");
  if (poly.size() >= 3 && poly.contains(p, 0.0)) return 0.0;
  const auto& v = poly.vertices();
  if (v.size() == 1) return norm.gauge(p - v[0]);
  double best = std::numeric_limits<double>::infinity();
  const std::size_t nedges = v.size() == 2 ? 1 : v.size();
  for (std::size_t i = 0; i < nedges; ++i) {
    Vec2 a = v[i], b = v[(i + 1) % v.size()];
    // phi(p - (a + t(b-a))) is convex in t: golden-section on [0,1]
    const double gr = 0.6180339887498949;
    double lo = 0.0, hi = 1.0;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = norm.gauge(p - (a + (b - a) * x1));
    double f2 = norm.gauge(p - (a + (b - a) * x2));
    for (int it = 0; it < 80; ++it) {
      if (f1 < f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - gr * (hi - lo);
        f1 = norm.gauge(p - (a + (b - a) * x1));
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + gr * (hi - lo);
        f2 = norm.gauge(p - (a + (b - a) * x2));
      }
    }
    best = std::min(best, std::min(f1, f2));
  }
  return best;
}

bool region_contains_point(const RoundedRegion& region, const Norm& norm, Vec2 p,
                           double tol) {
  if (region.empty()) return false;
  return gauge_distance(region.core, norm, p) <= region.rho + tol;
}

bool region_contains(const RoundedRegion& outer, const RoundedRegion& inner,
                     const Norm& norm, double tol) {
  if (inner.empty()) return true;
  if (outer.empty()) return false;
  RoundedRegion er = erode(outer, norm, std::max(0.0, inner.rho - tol));
  if (er.empty()) return false;
  for (const Vec2& p : inner.core.vertices())
    if (!region_contains_point(er, norm, p, tol)) return false;
  return true;
}

}  // namespace wulff
