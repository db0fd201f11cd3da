#include "ineqlab/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ineqlab/errors.hpp"

namespace ineqlab::lp {

void LPProblem::add_row(std::vector<double> coeffs, double bound) {
  if (coeffs.size() != objective.size()) throw DomainError("LP row length does not match the variable count");
  rows.push_back(std::move(coeffs));
  rhs.push_back(bound);
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Optimal: return "optimal";
    case Status::Infeasible: return "infeasible";
    case Status::Unbounded: return "unbounded";
    case Status::IterationLimit: return "iteration-limit";
  }
  return "?";
}

namespace {

// Dictionary x_B = rhs - T x_N, z = z0 + obj . x_N.
struct Tableau {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<double> t;
  std::vector<double> rhs;
  std::vector<double> obj;
  double z = 0.0;
  std::vector<int> basic;
  std::vector<int> nonbasic;

  double& at(std::size_t i, std::size_t j) { return t[i * n + j]; }
  double at(std::size_t i, std::size_t j) const { return t[i * n + j]; }

  void pivot(std::size_t r, std::size_t s) {
    const double a = at(r, s);
    double* row_r = &t[r * n];
    for (std::size_t j = 0; j < n; ++j) row_r[j] /= a;
    row_r[s] = 1.0 / a;
    rhs[r] /= a;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r) continue;
      double* row_i = &t[i * n];
      const double f = row_i[s];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) row_i[j] -= f * row_r[j];
      row_i[s] = -f / a;
      rhs[i] -= f * rhs[r];
    }
    const double cs = obj[s];
    if (cs != 0.0) {
      for (std::size_t j = 0; j < n; ++j) obj[j] -= cs * row_r[j];
      obj[s] = -cs / a;
      z += cs * rhs[r];
    }
    std::swap(basic[r], nonbasic[s]);
  }

  void drop_column(std::size_t s) {
    std::vector<double> nt;
    nt.reserve(m * (n - 1));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j != s) nt.push_back(at(i, j));
      }
    }
    t = std::move(nt);
    obj.erase(obj.begin() + static_cast<std::ptrdiff_t>(s));
    nonbasic.erase(nonbasic.begin() + static_cast<std::ptrdiff_t>(s));
    --n;
  }
};

struct RunStats {
  int iterations = 0;
  bool bland_used = false;
};

Status run_simplex(Tableau& tab, const SolveOptions& opt, RunStats& stats) {
  int degenerate_streak = 0;
  while (true) {
    const bool bland = degenerate_streak >= opt.degeneracy_threshold;
    if (bland) stats.bland_used = true;

    std::size_t s = tab.n;
    for (std::size_t j = 0; j < tab.n; ++j) {
      if (tab.obj[j] <= opt.cost_tol) continue;
      if (s == tab.n) {
        s = j;
      } else if (bland ? tab.nonbasic[j] < tab.nonbasic[s] : tab.obj[j] > tab.obj[s]) {
        s = j;
      }
    }
    if (s == tab.n) return Status::Optimal;
    if (stats.iterations >= opt.max_iterations) return Status::IterationLimit;

    // Harris ratio test: bound the step with slightly relaxed rows, then take
    // the largest pivot among the rows that block within that bound.
    double theta = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < tab.m; ++i) {
      const double a = tab.at(i, s);
      if (a > opt.pivot_tol) theta = std::min(theta, (std::max(tab.rhs[i], 0.0) + opt.harris_tol) / a);
    }
    std::size_t r = tab.m;
    double best = 0.0;
    for (std::size_t i = 0; i < tab.m; ++i) {
      const double a = tab.at(i, s);
      if (a <= opt.pivot_tol) continue;
      const double ratio = std::max(tab.rhs[i], 0.0) / a;
      if (ratio > theta) continue;
      const bool better = r == tab.m || (bland ? tab.basic[i] < tab.basic[r] : a > tab.at(r, s));
      if (better) {
        r = i;
        best = ratio;
      }
    }
    if (r == tab.m) return Status::Unbounded;

    degenerate_streak = best <= 1e-14 ? degenerate_streak + 1 : 0;
    // Rows the relaxed test let slip below zero are snapped back before they
    // would be amplified by a small pivot.
    tab.rhs[r] = std::max(tab.rhs[r], 0.0);
    tab.pivot(r, s);
    ++stats.iterations;
  }
}

// Gaussian elimination with partial pivoting; false when singular.
bool solve_dense(std::vector<double> a, std::vector<double>& b, std::size_t k) {
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    for (std::size_t i = c + 1; i < k; ++i) {
      if (std::abs(a[i * k + c]) > std::abs(a[p * k + c])) p = i;
    }
    if (std::abs(a[p * k + c]) < 1e-14) return false;
    if (p != c) {
      for (std::size_t j = 0; j < k; ++j) std::swap(a[p * k + j], a[c * k + j]);
      std::swap(b[p], b[c]);
    }
    for (std::size_t i = c + 1; i < k; ++i) {
      const double f = a[i * k + c] / a[c * k + c];
      if (f == 0.0) continue;
      for (std::size_t j = c; j < k; ++j) a[i * k + j] -= f * a[c * k + j];
      b[i] -= f * b[c];
    }
  }
  for (std::size_t c = k; c-- > 0;) {
    double v = b[c];
    for (std::size_t j = c + 1; j < k; ++j) v -= a[c * k + j] * b[j];
    b[c] = v / a[c * k + c];
  }
  return true;
}

double residual(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                const std::vector<double>& x) {
  double worst = 0.0;
  for (double v : x) worst = std::max(worst, -v);
  for (std::size_t i = 0; i < a.size(); ++i) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += a[i][j] * x[j];
    worst = std::max(worst, lhs - b[i]);
  }
  return worst;
}

}  // namespace

LPSolution solve_lp(const LPProblem& lp, const SolveOptions& opt) {
  const std::size_t nv = lp.cols();
  const std::size_t nr = lp.num_rows();
  if (lp.rhs.size() != nr) throw DomainError("LP right-hand side length does not match the row count");
  for (const auto& row : lp.rows) {
    if (row.size() != nv) throw DomainError("LP row length does not match the variable count");
  }

  // Equilibrate: rows by their largest entry, then columns.
  std::vector<std::vector<double>> a = lp.rows;
  std::vector<double> b = lp.rhs;
  for (std::size_t i = 0; i < nr; ++i) {
    double mx = 0.0;
    for (double v : a[i]) mx = std::max(mx, std::abs(v));
    if (mx > 0.0) {
      for (double& v : a[i]) v /= mx;
      b[i] /= mx;
    }
  }
  std::vector<double> col_scale(nv, 1.0);
  for (std::size_t j = 0; j < nv; ++j) {
    double mx = 0.0;
    for (std::size_t i = 0; i < nr; ++i) mx = std::max(mx, std::abs(a[i][j]));
    if (mx > 0.0) {
      col_scale[j] = 1.0 / mx;
      for (std::size_t i = 0; i < nr; ++i) a[i][j] /= mx;
    }
  }
  std::vector<double> c(nv);
  for (std::size_t j = 0; j < nv; ++j) c[j] = lp.objective[j] * col_scale[j];

  Tableau tab;
  tab.m = nr;
  tab.n = nv;
  tab.t.resize(nr * nv);
  for (std::size_t i = 0; i < nr; ++i) {
    std::copy(a[i].begin(), a[i].end(), tab.t.begin() + static_cast<std::ptrdiff_t>(i * nv));
  }
  tab.rhs = b;
  tab.basic.resize(nr);
  tab.nonbasic.resize(nv);
  for (std::size_t j = 0; j < nv; ++j) tab.nonbasic[j] = static_cast<int>(j);
  for (std::size_t i = 0; i < nr; ++i) tab.basic[i] = static_cast<int>(nv + i);

  LPSolution sol;
  RunStats stats;

  const auto most_negative = std::min_element(b.begin(), b.end());
  if (most_negative != b.end() && *most_negative < 0.0) {
    const int aux = static_cast<int>(nv + nr);
    std::vector<double> nt;
    nt.reserve(nr * (nv + 1));
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t j = 0; j < nv; ++j) nt.push_back(tab.at(i, j));
      nt.push_back(-1.0);
    }
    tab.t = std::move(nt);
    tab.n = nv + 1;
    tab.nonbasic.push_back(aux);
    tab.obj.assign(tab.n, 0.0);
    tab.obj[nv] = -1.0;
    tab.pivot(static_cast<std::size_t>(most_negative - b.begin()), nv);

    const Status phase1 = run_simplex(tab, opt, stats);
    sol.iterations = stats.iterations;
    sol.bland_used = stats.bland_used;
    if (phase1 == Status::IterationLimit) return sol;
    if (tab.z < -opt.residual_tol) {
      sol.status = Status::Infeasible;
      return sol;
    }
    for (std::size_t i = 0; i < tab.m; ++i) {
      if (tab.basic[i] != aux) continue;
      std::size_t s = tab.n;
      for (std::size_t j = 0; j < tab.n; ++j) {
        if (std::abs(tab.at(i, j)) > opt.pivot_tol && (s == tab.n || std::abs(tab.at(i, j)) > std::abs(tab.at(i, s)))) {
          s = j;
        }
      }
      if (s == tab.n) throw Error("LP phase 1 left the auxiliary variable basic in an empty row");
      tab.pivot(i, s);
    }
    const auto aux_pos = std::find(tab.nonbasic.begin(), tab.nonbasic.end(), aux) - tab.nonbasic.begin();
    tab.drop_column(static_cast<std::size_t>(aux_pos));
  }

  // Phase-2 objective in terms of the current nonbasic variables.
  tab.obj.assign(tab.n, 0.0);
  tab.z = 0.0;
  for (std::size_t j = 0; j < tab.n; ++j) {
    if (tab.nonbasic[j] < static_cast<int>(nv)) tab.obj[j] = c[static_cast<std::size_t>(tab.nonbasic[j])];
  }
  for (std::size_t i = 0; i < tab.m; ++i) {
    if (tab.basic[i] >= static_cast<int>(nv)) continue;
    const double ck = c[static_cast<std::size_t>(tab.basic[i])];
    if (ck == 0.0) continue;
    tab.z += ck * tab.rhs[i];
    for (std::size_t j = 0; j < tab.n; ++j) tab.obj[j] -= ck * tab.at(i, j);
  }

  sol.status = run_simplex(tab, opt, stats);
  sol.iterations = stats.iterations;
  sol.bland_used = stats.bland_used;
  if (sol.status == Status::Unbounded) return sol;

  std::vector<double> xs(nv, 0.0);
  for (std::size_t i = 0; i < tab.m; ++i) {
    if (tab.basic[i] < static_cast<int>(nv)) xs[static_cast<std::size_t>(tab.basic[i])] = tab.rhs[i];
  }
  sol.max_residual = residual(a, b, xs);

  if (sol.max_residual > opt.residual_tol) {
    // Re-solve the basis directly: basic structural columns on the rows whose
    // slack is nonbasic.
    std::vector<std::size_t> cols;
    for (int lbl : tab.basic) {
      if (lbl < static_cast<int>(nv)) cols.push_back(static_cast<std::size_t>(lbl));
    }
    std::vector<std::size_t> tight;
    for (int lbl : tab.nonbasic) {
      if (lbl >= static_cast<int>(nv)) tight.push_back(static_cast<std::size_t>(lbl) - nv);
    }
    const std::size_t k = cols.size();
    if (tight.size() != k) throw Error("LP basis is inconsistent after pivoting");
    std::vector<double> mat(k * k);
    std::vector<double> rhs(k);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t cc = 0; cc < k; ++cc) mat[r * k + cc] = a[tight[r]][cols[cc]];
      rhs[r] = b[tight[r]];
    }
    if (!solve_dense(std::move(mat), rhs, k)) throw Error("LP basis is numerically singular");
    std::fill(xs.begin(), xs.end(), 0.0);
    for (std::size_t cc = 0; cc < k; ++cc) xs[cols[cc]] = rhs[cc];
    sol.refactorized = true;
    sol.max_residual = residual(a, b, xs);
    if (sol.max_residual > 1e3 * opt.residual_tol) {
      throw Error("LP residual " + std::to_string(sol.max_residual) + " persists after refactorization");
    }
  }

  sol.x.resize(nv);
  sol.optimum = 0.0;
  for (std::size_t j = 0; j < nv; ++j) {
    sol.x[j] = std::max(xs[j], 0.0) * col_scale[j];
    sol.optimum += lp.objective[j] * sol.x[j];
  }
  return sol;
}

}  // namespace ineqlab::lp
