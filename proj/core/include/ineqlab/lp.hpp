#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ineqlab::lp {

// maximize c^T x  subject to  A x <= b,  x >= 0.
// A is dense, row-major, rows() x cols().
struct LPProblem {
  std::vector<double> objective;
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;

  std::size_t cols() const { return objective.size(); }
  std::size_t num_rows() const { return rows.size(); }
  void add_row(std::vector<double> coeffs, double bound);
};

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

std::string_view to_string(Status s);

struct SolveOptions {
  int max_iterations = 200000;
  int degeneracy_threshold = 50;  // consecutive degenerate pivots before Bland's rule
  double pivot_tol = 1e-11;
  double harris_tol = 1e-10;  // primal slack allowed in the ratio test, scaled data
  double cost_tol = 1e-10;
  double residual_tol = 1e-9;
};

struct LPSolution {
  Status status = Status::IterationLimit;
  double optimum = 0.0;
  std::vector<double> x;
  int iterations = 0;
  bool bland_used = false;
  bool refactorized = false;
  double max_residual = 0.0;  // on the scaled rows, including x >= 0
};

// Dense condensed-tableau primal simplex with row and column equilibration.
// Dantzig pricing, switching to Bland's rule while degenerate pivots pile up.
// A negative right-hand side triggers a phase 1 with one auxiliary column.
// Throws Error when the final basis stays singular after refactorization.
LPSolution solve_lp(const LPProblem& lp, const SolveOptions& opt = {});

}  // namespace ineqlab::lp
