#include "wulff/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace wulff {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTieTol = 1e-9;

struct Candidate {
  int j = 0;
  double r = 0.0;
  double energy = std::numeric_limits<double>::infinity();
  bool ball_top = false;
};

// Pick the lowest-energy candidate; prefer fewer layers, then no ball, on ties.
Candidate best_of(const std::vector<Candidate>& cands) {
  Candidate best;
  for (const Candidate& c : cands) {
    double tol = kTieTol * std::max(1.0, std::min(best.energy, c.energy));
    if (c.energy < best.energy - tol ||
        (c.energy <= best.energy + tol &&
         (c.j < best.j || (c.j == best.j && !c.ball_top && best.ball_top))))
      best = c;
  }
  return best;
}

}  // namespace

// Unit square, Euclidean norm.  Two candidate families from the structure
// theorem (r_Omega = 0, R_Omega = 1/2):
//   A: j plaquettes Om^r with j (1 - (4-pi) r^2) = m, energy F_A(j);
//   B: j-1 plaquettes plus a ball of the same radius,
//      pi r^2 + (j-1)(1 - (4-pi) r^2) = m.
// The energy of each family is unimodal in j, so only the integers around
// the real minimizer (clamped to the feasible range) matter.
SquareSolution square_euclidean(double m) {
  if (!(m > 0.0)) throw std::invalid_argument("square_euclidean: mass must be positive");
  const double a = 4.0 - kPi;

  std::vector<Candidate> cands;

  // family A: feasible j have r_A(j) in [0, 1/2], i.e. m <= j <= 4m/pi
  {
    const int j_min = std::max(1, static_cast<int>(std::ceil(m - 1e-12)));
    const int j_max = static_cast<int>(std::floor(4.0 * m / kPi + 1e-12));
    const double x_star = (2.0 + std::sqrt(kPi)) / (2.0 * std::sqrt(kPi)) * m;
    if (j_min <= j_max)
      for (int j : {static_cast<int>(std::floor(x_star)),
                    static_cast<int>(std::floor(x_star)) + 1, j_min, j_max}) {
        j = std::clamp(j, j_min, j_max);
        double r = std::sqrt(std::max(0.0, (1.0 - m / j) / a));
        cands.push_back({j, r, j * (4.0 - 2.0 * a * r), false});
      }
  }

  // family B: r_B(j)^2 = (j-1-m) / (a (j-1) - pi) must lie in (0, 1/4]
  {
    const double slope = (2.0 + std::sqrt(kPi)) / (2.0 * std::sqrt(kPi));
    const double shift = (4.0 + std::sqrt(kPi)) / (2.0 * (2.0 + std::sqrt(kPi)));
    const int jb = static_cast<int>(std::floor(slope * m + shift));
    std::vector<int> js = {1, 2, 3, 4, 5, jb, jb + 1};
    for (int j : js) {
      if (j < 1) continue;
      double denom = a * (j - 1) - kPi;
      double num = j - 1.0 - m;
      double r2 = j == 1 ? m / kPi : num / denom;
      if (!(r2 > 0.0) || r2 > 0.25 + 1e-15) continue;
      double r = std::sqrt(r2);
      cands.push_back({j, r, (j - 1) * (4.0 - 2.0 * a * r) + 2.0 * kPi * r, true});
    }
  }

  if (cands.empty()) throw std::logic_error("square_euclidean: no feasible family");
  Candidate win = best_of(cands);

  SquareSolution s;
  s.j_max = win.j;
  s.r = win.r;
  s.energy = win.energy;
  if (win.ball_top) {
    s.branch = SquareBranch::I;
    s.window = {win.j, win.j};
  } else if (m <= 4.0 && win.j == static_cast<int>(std::ceil(m - 1e-12))) {
    s.branch = SquareBranch::II;
    s.window = {win.j, win.j};
  } else {
    s.branch = SquareBranch::III;
    int ja = static_cast<int>(
        std::floor((2.0 + std::sqrt(kPi)) / (2.0 * std::sqrt(kPi)) * m));
    s.window = {ja, ja + 1};
  }
  // a second candidate within the tie tolerance marks a genuine tie
  for (const Candidate& c : cands)
    if ((c.j != win.j || c.ball_top != win.ball_top) &&
        std::abs(c.energy - win.energy) <= kTieTol * std::max(1.0, win.energy))
      s.tie = true;
  return s;
}

// Unit square, l1 norm (Wulff shape: the diamond, |W| = 2).  Same two
// families with |Om^r| = 1 - 2 r^2 and P(Om^r) = 4 - 4r; the ball-top
// family with j = 2 has an r-independent mass (= 1), producing the
// one-parameter tie at m = 1.
SquareSolution square_crystalline(double m) {
  if (!(m > 0.0))
    throw std::invalid_argument("square_crystalline: mass must be positive");

  std::vector<Candidate> cands;
  bool family_tie = false;

  // family A: r_A(j)^2 = (1 - m/j)/2 in [0, 1/4], i.e. m <= j <= 2m
  {
    const int j_min = std::max(1, static_cast<int>(std::ceil(m - 1e-12)));
    const int j_max = static_cast<int>(std::floor(2.0 * m + 1e-12));
    const double x_star = (1.0 + std::sqrt(2.0)) / 2.0 * m;
    if (j_min <= j_max)
      for (int j : {static_cast<int>(std::floor(x_star)),
                    static_cast<int>(std::floor(x_star)) + 1, j_min, j_max}) {
        j = std::clamp(j, j_min, j_max);
        double r = std::sqrt(std::max(0.0, (1.0 - m / j) / 2.0));
        cands.push_back({j, r, j * (4.0 - 4.0 * r), false});
      }
  }

  // family B: mass 2r^2 + (j-1)(1 - 2r^2); for j = 2 the mass is 1 for
  // every r, an exact one-parameter family of minimizers
  {
    if (m <= 0.5 + 1e-15) {
      double r = std::sqrt(m / 2.0);
      cands.push_back({1, r, 4.0 * r, true});
    }
    if (std::abs(m - 1.0) <= 1e-12) {
      cands.push_back({2, 0.25, 4.0, true});
      family_tie = true;
    }
    for (int j = 3; j <= static_cast<int>(m) + 2; ++j) {
      double r2 = (j - 1.0 - m) / (2.0 * (j - 2.0));
      if (!(r2 > 0.0) || r2 > 0.25 + 1e-15) continue;
      double r = std::sqrt(r2);
      cands.push_back({j, r, (j - 1) * (4.0 - 4.0 * r) + 4.0 * r, true});
    }
  }

  if (cands.empty()) throw std::logic_error("square_crystalline: no feasible family");
  Candidate win = best_of(cands);

  SquareSolution s;
  s.j_max = win.j;
  s.r = win.r;
  s.energy = win.energy;
  for (const Candidate& c : cands)
    if ((c.j != win.j || c.ball_top != win.ball_top) &&
        std::abs(c.energy - win.energy) <= kTieTol * std::max(1.0, win.energy))
      s.tie = true;

  if (family_tie && std::abs(win.energy - 4.0) <= 1e-9) {
    s.branch = SquareBranch::III;
    s.j_max = 1;
    s.r = 0.0;
    s.window = {1, 2};
    s.tie = true;
  } else if (win.ball_top) {
    s.branch = SquareBranch::I;
    s.window = {win.j, win.j};
  } else if (win.j == 1) {
    s.branch = SquareBranch::II;
    s.window = {1, 1};
  } else {
    s.branch = SquareBranch::IV;
    int ja = static_cast<int>(std::floor((1.0 + std::sqrt(2.0)) / 2.0 * m));
    s.window = {ja, ja + 1};
  }
  return s;
}

}  // namespace wulff
