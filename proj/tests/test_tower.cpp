#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "test_util.hpp"
#include "wulff/closed_form.hpp"
#include "wulff/isoperimetric.hpp"
#include "wulff/tower.hpp"

using namespace wulff;

namespace {
const double kPi = 3.14159265358979323846;

RoundedRegion unit_square() { return {ConvexPolygon::rectangle(1.0, 1.0), 0.0}; }
}  // namespace

TEST_CASE("tower matches the euclidean closed form on the unit square") {
  Norm euc = Norm::euclidean();
  for (double m : {0.2, 0.7, 1.2, 1.9, 3.0, 7.7, 15.0, 33.3}) {
    TowerProfile p = solve_tower({unit_square(), euc, m});
    SquareSolution cf = square_euclidean(m);
    CHECK(p.energy == doctest::Approx(cf.energy).epsilon(1e-9));
    if (!cf.tie) CHECK(p.j_max == cf.j_max);
    CHECK(p.mass == doctest::Approx(m).epsilon(1e-9));
    CHECK(static_cast<int>(p.layers.size()) == p.j_max);
  }
}

TEST_CASE("tower matches the crystalline closed form on the unit square") {
  Norm l1 = Norm::l1();
  for (double m : {0.2, 0.49, 0.8, 0.999, 1.4, 2.6, 9.1, 24.0}) {
    TowerProfile p = solve_tower({unit_square(), l1, m});
    SquareSolution cf = square_crystalline(m);
    CHECK(p.energy == doctest::Approx(cf.energy).epsilon(1e-9));
    if (!cf.tie) CHECK(p.j_max == cf.j_max);
    CHECK(p.mass == doctest::Approx(m).epsilon(1e-9));
  }
}

TEST_CASE("the crystalline m = 1 tie is reported") {
  TowerProfile p = solve_tower({unit_square(), Norm::l1(), 1.0});
  CHECK(p.energy == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(!p.ties.empty());
}

TEST_CASE("layer radii are nonincreasing and layers are nested") {
  std::mt19937 rng(97);
  Norm norms[3] = {Norm::euclidean(), Norm::l1(), wulff_test::random_hexagon_norm(rng)};
  std::uniform_real_distribution<double> frac(0.2, 6.0);
  for (int trial = 0; trial < 30; ++trial) {
    ConvexPolygon dom = wulff_test::random_convex_polygon(rng, 8, 2.0);
    const Norm& norm = norms[trial % 3];
    double m = frac(rng) * dom.area();
    TowerProfile p = solve_tower({{dom, 0.0}, norm, m});
    REQUIRE(!p.layers.empty());
    double total = 0.0;
    for (std::size_t i = 0; i < p.layers.size(); ++i) {
      total += area(p.layers[i].region, norm);
      if (i > 0) {
        CHECK(p.layers[i].r <= p.layers[i - 1].r + 1e-9);
        CHECK(region_contains(p.layers[i - 1].region, p.layers[i].region, norm,
                              1e-6 * dom.diameter()));
      }
    }
    CHECK(total == doctest::Approx(m).epsilon(1e-9));
    double esum = 0.0;
    for (const auto& L : p.layers) esum += perimeter_phi(L.region, norm);
    CHECK(esum == doctest::Approx(p.energy).epsilon(1e-8));
  }
}

TEST_CASE("each layer solves its own isoperimetric problem") {
  std::mt19937 rng(101);
  Norm norms[2] = {Norm::euclidean(), Norm::l1()};
  std::uniform_real_distribution<double> frac(0.3, 4.0);
  for (int trial = 0; trial < 16; ++trial) {
    ConvexPolygon dom = wulff_test::random_convex_polygon(rng, 7, 2.0);
    const Norm& norm = norms[trial % 2];
    double m = frac(rng) * dom.area();
    TowerProfile p = solve_tower({{dom, 0.0}, norm, m});
    for (const auto& L : p.layers) {
      double lm = area(L.region, norm);
      if (lm < 1e-12 || lm > dom.area() - 1e-12) continue;
      IsoperimetricSolution iso = solve_isoperimetric({dom, 0.0}, norm, lm);
      CHECK(perimeter_phi(L.region, norm) <=
            iso.perimeter + 1e-9 * std::max(1.0, iso.perimeter));
    }
  }
}

TEST_CASE("at most two distinct non-domain layer shapes") {
  std::mt19937 rng(103);
  std::uniform_real_distribution<double> frac(0.3, 6.0);
  for (int trial = 0; trial < 20; ++trial) {
    ConvexPolygon dom = wulff_test::random_convex_polygon(rng, 7, 2.0);
    Norm norm = (trial % 2 == 0) ? Norm::euclidean() : Norm::l1();
    double m = frac(rng) * dom.area();
    TowerProfile p = solve_tower({{dom, 0.0}, norm, m});
    // count distinct (kind, r) among layers that are not the full domain
    std::vector<std::pair<int, double>> shapes;
    for (const auto& L : p.layers) {
      if (L.kind == LayerShape::Kind::FullDomain) continue;
      bool seen = false;
      for (auto& s : shapes)
        if (s.first == static_cast<int>(L.kind) && std::abs(s.second - L.r) <= 1e-7)
          seen = true;
      if (!seen) shapes.push_back({static_cast<int>(L.kind), L.r});
    }
    CHECK(shapes.size() <= 2);
  }
}

TEST_CASE("case D on the 2x1 rectangle: stadium window") {
  RoundedRegion rect{ConvexPolygon::rectangle(2.0, 1.0), 0.0};
  Norm euc = Norm::euclidean();
  double R = 0.5;
  double bstar = R * R * kPi;            // mass of the inscribed disc
  double astar = area(plaquette(rect, euc, R), euc);  // full stadium mass
  int j = 2;
  // strictly inside the window, away from the r = R case-B coincidence at
  // the midpoint m = B* + A*
  double m = 0.3 * (j * bstar) + 0.7 * (j * astar);
  TowerProfile p = solve_tower({rect, euc, m});
  CHECK(p.tower_case == TowerCase::D);
  CHECK(p.j_max == j);
  CHECK(p.energy == doctest::Approx(j * R * euc.wulff_area() + m / R).epsilon(1e-9));
  for (const auto& L : p.layers) {
    CHECK(L.kind == LayerShape::Kind::Stadium);
    CHECK(L.region.rho == doctest::Approx(R).epsilon(1e-9));
  }
  CHECK(p.mass == doctest::Approx(m).epsilon(1e-9));
}

TEST_CASE("small masses give a single ball (case B with j = 1)") {
  std::mt19937 rng(107);
  for (int trial = 0; trial < 10; ++trial) {
    ConvexPolygon dom = wulff_test::random_convex_polygon(rng, 7, 2.0);
    Norm norm = (trial % 2 == 0) ? Norm::euclidean() : Norm::l1();
    double R = max_inscribed_radius({dom, 0.0}, norm).radius;
    double m = 0.25 * R * R * norm.wulff_area();
    TowerProfile p = solve_tower({{dom, 0.0}, norm, m});
    CHECK(p.j_max == 1);
    REQUIRE(p.layers.size() == 1);
    CHECK(p.layers[0].kind == LayerShape::Kind::WulffBall);
    CHECK(p.energy ==
          doctest::Approx(2.0 * std::sqrt(m * norm.wulff_area())).epsilon(1e-9));
  }
}

TEST_CASE("energy_curve is nondecreasing in mass") {
  RoundedRegion rect{ConvexPolygon::rectangle(2.0, 1.0), 0.0};
  std::vector<double> masses;
  for (double m = 0.05; m < 12.0; m += 0.12) masses.push_back(m);
  std::vector<TowerProfile> curve = energy_curve(rect, Norm::euclidean(), masses);
  REQUIRE(curve.size() == masses.size());
  for (std::size_t i = 1; i < curve.size(); ++i)
    CHECK(curve[i].energy >= curve[i - 1].energy - 1e-9);
}

TEST_CASE("cheeger limit on the unit square") {
  CheegerResult euc = cheeger_limit(unit_square(), Norm::euclidean());
  CHECK(euc.r_star == doctest::Approx(1.0 / (2.0 + std::sqrt(kPi))).epsilon(1e-9));
  CheegerResult l1 = cheeger_limit(unit_square(), Norm::l1());
  CHECK(l1.r_star == doctest::Approx(1.0 / (2.0 + std::sqrt(2.0))).epsilon(1e-9));
}

TEST_CASE("plaquette radii approach the cheeger radius as m grows") {
  // the exact window radius oscillates around r* with amplitude ~ 1/(2m);
  // at m = 200 the gap is 1.57e-3
  Norm euc = Norm::euclidean();
  CheegerResult ch = cheeger_limit(unit_square(), euc);
  TowerProfile p200 = solve_tower({unit_square(), euc, 200.0});
  CHECK(std::abs(p200.r_bar - ch.r_star) <= 2e-3);
  TowerProfile p2000 = solve_tower({unit_square(), euc, 2000.0});
  CHECK(std::abs(p2000.r_bar - ch.r_star) <= 1e-3);
}

TEST_CASE("zero mass gives the empty profile; negative mass throws") {
  TowerProfile p = solve_tower({unit_square(), Norm::euclidean(), 0.0});
  CHECK(p.layers.empty());
  CHECK(p.energy == doctest::Approx(0.0));
  CHECK(p.j_max == 0);
  CHECK_THROWS_AS(solve_tower({unit_square(), Norm::euclidean(), -3.0}),
                  std::invalid_argument);
}
