#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "test_util.hpp"
#include "wulff/oracle.hpp"
#include "wulff/tower.hpp"

using namespace wulff;

namespace {
const double kPi = 3.14159265358979323846;
}

TEST_CASE("oracle reproduces the square closed forms") {
  RoundedRegion sq{ConvexPolygon::rectangle(1.0, 1.0), 0.0};
  GridOracle euc(sq, Norm::euclidean(), 20000);
  for (double m : {0.3, 0.95, 1.6, 5.0, 12.0}) {
    OracleReport rep = euc.min_energy(m);
    TowerProfile p = solve_tower({sq, Norm::euclidean(), m});
    CHECK(rep.best_energy >= p.energy - 1e-6 * std::max(1.0, p.energy));
    CHECK(rep.best_energy <= p.energy + 1e-5 * std::max(1.0, p.energy));
  }
  GridOracle l1(sq, Norm::l1(), 20000);
  for (double m : {0.3, 0.8, 1.0, 2.3, 9.0}) {
    OracleReport rep = l1.min_energy(m);
    TowerProfile p = solve_tower({sq, Norm::l1(), m});
    CHECK(rep.best_energy >= p.energy - 1e-6 * std::max(1.0, p.energy));
    CHECK(rep.best_energy <= p.energy + 1e-5 * std::max(1.0, p.energy));
  }
}

TEST_CASE("oracle agrees with the solver on random domains") {
  std::mt19937 rng(131);
  std::uniform_real_distribution<double> frac(0.2, 5.0);
  for (int trial = 0; trial < 12; ++trial) {
    ConvexPolygon dom = wulff_test::random_convex_polygon(rng, 8, 2.0);
    Norm norm = (trial % 3 == 0)   ? Norm::euclidean()
                : (trial % 3 == 1) ? Norm::l1()
                                   : wulff_test::random_hexagon_norm(rng);
    GridOracle oracle({dom, 0.0}, norm, 20000);
    double m = frac(rng) * dom.area();
    TowerProfile p = solve_tower({{dom, 0.0}, norm, m});
    OracleReport rep = oracle.min_energy(m);
    double scale = std::max(1.0, p.energy);
    CHECK(rep.best_energy >= p.energy - 1e-6 * scale);
    CHECK(rep.best_energy <= p.energy + 1e-5 * scale);
  }
}

TEST_CASE("grid_min_energy fills the discrepancy field") {
  RoundedRegion sq{ConvexPolygon::rectangle(1.0, 1.0), 0.0};
  OracleReport rep = grid_min_energy({sq, Norm::euclidean(), 2.5}, 20000);
  CHECK(std::abs(rep.discrepancy) <= 1e-5 * std::max(1.0, rep.best_energy));
  CHECK(rep.grid_resolution == 20000);
}

TEST_CASE("discretized_measure converges to the exact Steiner values") {
  Norm euc = Norm::euclidean();
  RoundedRegion ball{ConvexPolygon::point({0, 0}), 1.0};
  auto [a64, p64] = discretized_measure(ball, euc, 64);
  auto [a1k, p1k] = discretized_measure(ball, euc, 1024);
  CHECK(std::abs(a1k - kPi) < std::abs(a64 - kPi));
  CHECK(std::abs(p1k - 2.0 * kPi) < std::abs(p64 - 2.0 * kPi));
  CHECK(a1k == doctest::Approx(kPi).epsilon(1e-4));
  CHECK(p1k == doctest::Approx(2.0 * kPi).epsilon(1e-3));

  // exact for polygonal norms
  Norm l1 = Norm::l1();
  RoundedRegion region{ConvexPolygon::rectangle(1.0, 1.0), 0.3};
  auto [a, p] = discretized_measure(region, l1, 64);
  CHECK(a == doctest::Approx(area(region, l1)).epsilon(1e-12));
  CHECK(p == doctest::Approx(perimeter_phi(region, l1)).epsilon(1e-12));
}

TEST_CASE("oracle rejects bad parameters") {
  RoundedRegion sq{ConvexPolygon::rectangle(1.0, 1.0), 0.0};
  CHECK_THROWS_AS(GridOracle(sq, Norm::euclidean(), 10), std::invalid_argument);
  GridOracle oracle(sq, Norm::euclidean(), 1000);
  CHECK_THROWS_AS(oracle.min_energy(0.0), std::invalid_argument);
}
