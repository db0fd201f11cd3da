#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "ineqlab/lp.hpp"

using namespace ineqlab;

namespace {

// Brute-force optimum of a 2-variable LP over all constraint-pair vertices.
double vertex_optimum(const lp::LPProblem& p) {
  std::vector<std::vector<double>> rows = p.rows;
  std::vector<double> rhs = p.rhs;
  rows.push_back({-1.0, 0.0});
  rhs.push_back(0.0);
  rows.push_back({0.0, -1.0});
  rhs.push_back(0.0);
  double best = -1e300;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const double det = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0];
      if (std::abs(det) < 1e-12) continue;
      const double x = (rhs[i] * rows[j][1] - rows[i][1] * rhs[j]) / det;
      const double y = (rows[i][0] * rhs[j] - rhs[i] * rows[j][0]) / det;
      bool feasible = true;
      for (std::size_t k = 0; k < rows.size(); ++k) feasible &= rows[k][0] * x + rows[k][1] * y <= rhs[k] + 1e-9;
      if (feasible) best = std::max(best, p.objective[0] * x + p.objective[1] * y);
    }
  }
  return best;
}

}  // namespace

TEST_SUITE("lp") {
  TEST_CASE("textbook problem") {
    lp::LPProblem p;
    p.objective = {3.0, 5.0};
    p.add_row({1.0, 0.0}, 4.0);
    p.add_row({0.0, 2.0}, 12.0);
    p.add_row({3.0, 2.0}, 18.0);
    const auto s = lp::solve_lp(p);
    CHECK(s.status == lp::Status::Optimal);
    CHECK(s.optimum == doctest::Approx(36.0));
    CHECK(s.x[0] == doctest::Approx(2.0));
    CHECK(s.x[1] == doctest::Approx(6.0));
  }

  TEST_CASE("unbounded and infeasible") {
    lp::LPProblem u;
    u.objective = {1.0, 1.0};
    u.add_row({1.0, -1.0}, 1.0);
    CHECK(lp::solve_lp(u).status == lp::Status::Unbounded);
    lp::LPProblem inf;
    inf.objective = {1.0};
    inf.add_row({1.0}, 1.0);
    inf.add_row({-1.0}, -2.0);
    CHECK(lp::solve_lp(inf).status == lp::Status::Infeasible);
  }

  TEST_CASE("negative right-hand side goes through phase 1") {
    lp::LPProblem p;
    p.objective = {-1.0, -1.0};
    p.add_row({-1.0, -1.0}, -2.0);  // x + y >= 2
    p.add_row({1.0, 0.0}, 5.0);
    const auto s = lp::solve_lp(p);
    CHECK(s.status == lp::Status::Optimal);
    CHECK(s.optimum == doctest::Approx(-2.0));
  }

  TEST_CASE("degenerate cycling example terminates") {
    // Beale's example, which cycles under naive Dantzig pricing.
    lp::LPProblem p;
    p.objective = {0.75, -150.0, 0.02, -6.0};
    p.add_row({0.25, -60.0, -0.04, 9.0}, 0.0);
    p.add_row({0.5, -90.0, -0.02, 3.0}, 0.0);
    p.add_row({0.0, 0.0, 1.0, 0.0}, 1.0);
    const auto s = lp::solve_lp(p);
    CHECK(s.status == lp::Status::Optimal);
    CHECK(s.optimum == doctest::Approx(0.05));
  }

  TEST_CASE("random 2D problems match vertex enumeration") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coef(-1.0, 2.0);
    std::uniform_real_distribution<double> rhs(0.5, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
      lp::LPProblem p;
      p.objective = {coef(rng), coef(rng)};
      for (int r = 0; r < 6; ++r) p.add_row({coef(rng), coef(rng)}, rhs(rng));
      p.add_row({1.0, 1.0}, 10.0);
      const auto s = lp::solve_lp(p);
      REQUIRE(s.status == lp::Status::Optimal);
      CHECK(s.optimum == doctest::Approx(vertex_optimum(p)).epsilon(1e-9));
      CHECK(s.max_residual <= 1e-9);
    }
  }
}
