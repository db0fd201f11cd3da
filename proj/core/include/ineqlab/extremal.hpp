#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ineqlab/lp.hpp"
#include "ineqlab/monotone_fn.hpp"
#include "ineqlab/params.hpp"

namespace ineqlab::extremal {

enum class ConstraintMode { Sampled, Guaranteed };

std::string_view to_string(ConstraintMode m);
ConstraintMode mode_from_string(std::string_view name);

// Zero-valued constraint fields are filled in by resolved():
// constraint_count = 12 m, constraint range = [t_min, 1e4 t_max].
struct DiscretizationSpec {
  int node_count = 160;
  double t_min = 1e-3;
  double t_max = 1e3;
  int constraint_count = 0;
  double constraint_lo = 0.0;
  double constraint_hi = 0.0;
  ConstraintMode mode = ConstraintMode::Guaranteed;
  int dense_factor = 4;

  DiscretizationSpec resolved() const;
  // Throws DomainError on t_min <= 0, m < 2, constraint_count < m and the like.
  void validate() const;
};

// Form-2 LP in nodal values h_j of a piecewise-linear h with h(0) = 0 and a
// constant tail past t_max. w and v are the assembled weights in nodal
// variables; `problem` is the same LP after the increment substitution
// h_j = d_1 + ... + d_j, d >= 0, which encodes monotonicity.
struct ExtremalLP {
  DiscretizationSpec disc;
  std::vector<double> nodes;
  std::vector<double> row_points;  // t at which each row's LHS is evaluated
  std::vector<double> row_rhs;
  std::vector<std::vector<double>> w;
  std::vector<double> v;           // includes the tail coefficient on h_m
  double tail_coeff = 0.0;         // (1 / (2 alpha)) ln(1 + t_max^{-2 alpha})
  bool origin_row = false;         // h_1 <= 0, added when alpha > 1
  lp::LPProblem problem;

  std::vector<double> nodal_from_increments(const std::vector<double>& d) const;
};

// Throws Error naming (row, node) when a weight quadrature does not converge.
ExtremalLP build_lp(const ParamSet& p, const DiscretizationSpec& d);

// Interpolant of nodal values on the LP nodes.
MonotoneFn interpolant(const ExtremalLP& lp, const std::vector<double>& h);

// h_m W(x_c) + L t int_0^{x_c} (1 - x)^{n-1} dx with x_c = min(1, h_m / (L t)):
// an upper bound for the form-2 LHS of any increasing h <= min(h_m, L u).
double tail_majorant(int n, double h_m, double slope, double t);

struct Certificate {
  bool passed = false;
  double small_t_end = 0.0;    // analytic bound covers (0, small_t_end]
  double small_t_bound = 0.0;
  double worst_ratio = 0.0;    // max of the analytic bound and the dense grid
  double worst_t = 0.0;
  double bracket_bound = 0.0;  // max LHS(t_{k+1}) / t_k^alpha over the dense grid
  double checked_lo = 0.0;
  double checked_hi = 0.0;
  double tail_bound = 0.0;     // sup of the majorant ratio on [checked_hi, inf)
  bool tail_needed = true;
  std::vector<double> dense_t;
  std::vector<double> dense_ratio;
  std::vector<double> violations;  // dense t with ratio > 1 + tol, at most 50
  std::string note;
};

constexpr double kCertificateTol = 1e-6;

// Post-hoc check of the form-2 constraint for all t > 0: an exact power bound
// on the leading piece, a dense grid of dense_factor * constraint_count points
// up to 10 * constraint_hi, and the log-growth majorant beyond.
Certificate certify(const MonotoneFn& h, const ParamSet& p, const DiscretizationSpec& d);

enum class SearchVerdict { Supports, CandidateCounterexample, Inconclusive };

std::string_view to_string(SearchVerdict v);

struct SearchReport {
  SearchReport(ParamSet p, DiscretizationSpec d) : params(p), disc(d) {}

  ParamSet params;
  DiscretizationSpec disc;
  lp::Status status = lp::Status::IterationLimit;
  int iterations = 0;
  double optimum = 0.0;
  double bound = 0.0;  // R2(alpha, n)
  double ratio = 0.0;
  double tail_term = 0.0;
  double target_of_optimizer = 0.0;  // target_form2 of the interpolant, by quadrature
  SearchVerdict verdict = SearchVerdict::Inconclusive;
  Certificate certificate;
  std::vector<double> optimizer_nodes;
  std::vector<double> optimizer_values;
  std::vector<std::string> warnings;
};

SearchReport search(const ParamSet& p, const DiscretizationSpec& d);

}  // namespace ineqlab::extremal
