#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

// Convex-geometry kernel: gauges and support functions of an anisotropy,
// convex polygons, and rounded regions (polygon core + Wulff-ball dilation).
// All shapes that appear in the solvers are RoundedRegions: the class is
// closed under Minkowski erosion/dilation by the Wulff shape, so areas and
// perimeters are exact via the Steiner formula and no curve discretization
// enters the solver path.

namespace wulff {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator-() const { return {-x, -y}; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double length(Vec2 v);
double distance(Vec2 a, Vec2 b);
// Outward normal of a counterclockwise edge direction.
inline Vec2 outward_normal(Vec2 edge) { return {edge.y, -edge.x}; }

// Convex polygon given by a counterclockwise vertex chain.  Degenerate
// chains are first-class citizens: 0 vertices (empty set), 1 (point),
// 2 (segment).  The constructor cleans duplicate and collinear vertices
// and rejects chains that are not convex and counterclockwise.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  explicit ConvexPolygon(std::vector<Vec2> vertices);

  static ConvexPolygon point(Vec2 p);
  static ConvexPolygon segment(Vec2 a, Vec2 b);
  static ConvexPolygon rectangle(double width, double height);
  static ConvexPolygon regular(int sides, double circumradius);

  const std::vector<Vec2>& vertices() const { return verts_; }
  std::size_t size() const { return verts_.size(); }
  bool empty() const { return verts_.empty(); }
  bool is_degenerate() const { return verts_.size() <= 2; }

  double area() const;
  double diameter() const;
  Vec2 vertex_centroid() const;  // midpoint for segments, the point itself for points
  bool contains(Vec2 p, double tol) const;

  ConvexPolygon translated(Vec2 t) const;
  ConvexPolygon scaled(double s) const;

 private:
  std::vector<Vec2> verts_;
};

ConvexPolygon convex_hull(std::vector<Vec2> points);
ConvexPolygon minkowski_sum(const ConvexPolygon& a, const ConvexPolygon& b);

// An anisotropy: either the Euclidean disc or a centrally symmetric convex
// polygon W (the Wulff shape).  Provides the gauge phi (W is its unit ball),
// the dual phi* (support function of W), |W| and P_phi(W) = 2|W|.
class Norm {
 public:
  static Norm euclidean();
  // Wulff shape given by its vertex chain; must be strictly convex,
  // counterclockwise, centrally symmetric (v a vertex iff -v is) and have
  // at least 4 vertices with the origin in the interior.
  static Norm wulff_polygon(std::vector<Vec2> vertices);
  static Norm l1();  // diamond {|x|+|y| <= 1}

  bool is_euclidean() const { return euclidean_; }
  double gauge(Vec2 v) const;
  double support(Vec2 v) const;  // phi*(v)
  double wulff_area() const { return wulff_area_; }
  double wulff_perimeter() const { return 2.0 * wulff_area_; }

  // The Wulff shape as a polygon; for the Euclidean norm, an inscribed
  // regular polygon with `segments` vertices.
  ConvexPolygon wulff_shape(int segments = 256) const;

 private:
  Norm() = default;
  bool euclidean_ = false;
  ConvexPolygon wulff_;
  double wulff_area_ = 0.0;
  // facet inequalities x . n <= h of the Wulff polygon, n unit
  std::vector<Vec2> facet_normals_;
  std::vector<double> facet_offsets_;
};

// The set core + rho * W_phi.  Encodes every shape in the pipeline:
// polygonal domains (rho = 0), Wulff plaquettes, Wulff balls (point core)
// and stadium layers (segment core).
struct RoundedRegion {
  ConvexPolygon core;
  double rho = 0.0;

  RoundedRegion() = default;
  RoundedRegion(ConvexPolygon c, double r) : core(std::move(c)), rho(r) {
    if (r < 0.0) throw std::invalid_argument("RoundedRegion: negative radius");
  }

  bool empty() const { return core.empty(); }
  double diameter(const Norm& norm) const;
};

double perimeter_phi(const ConvexPolygon& poly, const Norm& norm);
double perimeter_phi(const RoundedRegion& region, const Norm& norm);
double area(const RoundedRegion& region, const Norm& norm);

// Inner parallel body region - r*W, as a RoundedRegion.  Empty result means
// r exceeds the inscribed radius.
RoundedRegion erode(const RoundedRegion& region, const Norm& norm, double r);

// Wulff plaquette: union of all Wulff balls of radius r contained in the
// region; equals (region - rW) + rW.  r = 0 returns the region unchanged.
RoundedRegion plaquette(const RoundedRegion& region, const Norm& norm, double r);

struct InscribedBall {
  double radius = 0.0;        // R_Omega, the anisotropic inradius
  ConvexPolygon center_set;   // always degenerate: a point or a segment
};

InscribedBall max_inscribed_radius(const RoundedRegion& region, const Norm& norm);

// Largest r such that the region satisfies the rW_phi-condition (every
// boundary point touched from inside by a contained Wulff ball of radius r);
// 0 for cores with corners and rho = 0.
double rw_condition_radius(const RoundedRegion& region, const Norm& norm);

// P_phi(E) - sqrt(|E|/|W|) P_phi(W); nonnegative by the anisotropic
// isoperimetric inequality, zero exactly on Wulff balls.
double isoperimetric_deficit(const RoundedRegion& region, const Norm& norm);

// Polygonal outline of the region boundary: exact Minkowski sum for
// polygonal norms, inscribed `segments`-gon approximation of the disc for
// the Euclidean norm.
ConvexPolygon discretize(const RoundedRegion& region, const Norm& norm, int segments);

// Anisotropic distance min { phi(p - q) : q in poly }; 0 inside.
double gauge_distance(const ConvexPolygon& poly, const Norm& norm, Vec2 p);

bool region_contains_point(const RoundedRegion& region, const Norm& norm, Vec2 p,
                           double tol);
// inner subset of outer, within tol.
bool region_contains(const RoundedRegion& outer, const RoundedRegion& inner,
                     const Norm& norm, double tol);

}  // namespace wulff
