#include "ineqlab/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ineqlab/errors.hpp"
#include "ineqlab/forms.hpp"
#include "ineqlab/quad.hpp"
#include "ineqlab/specfun.hpp"

namespace ineqlab::extremal {

std::string_view to_string(ConstraintMode m) {
  return m == ConstraintMode::Sampled ? "sampled" : "guaranteed";
}

ConstraintMode mode_from_string(std::string_view name) {
  if (name == "sampled") return ConstraintMode::Sampled;
  if (name == "guaranteed") return ConstraintMode::Guaranteed;
  throw ParseError("unknown constraint mode '" + std::string(name) + "' (expected sampled or guaranteed)");
}

std::string_view to_string(SearchVerdict v) {
  switch (v) {
    case SearchVerdict::Supports: return "SUPPORTS";
    case SearchVerdict::CandidateCounterexample: return "CANDIDATE-COUNTEREXAMPLE";
    case SearchVerdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

DiscretizationSpec DiscretizationSpec::resolved() const {
  DiscretizationSpec r = *this;
  if (r.constraint_count == 0) r.constraint_count = 12 * r.node_count;
  if (r.constraint_lo == 0.0) r.constraint_lo = r.t_min;
  if (r.constraint_hi == 0.0) r.constraint_hi = 1e4 * r.t_max;
  return r;
}

void DiscretizationSpec::validate() const {
  const DiscretizationSpec r = resolved();
  if (!(r.t_min > 0.0) || !(r.t_min < r.t_max) || !std::isfinite(r.t_max)) {
    throw DomainError("node range needs 0 < t_min < t_max < inf");
  }
  if (r.node_count < 2) throw DomainError("node_count must be at least 2");
  if (r.constraint_count < r.node_count) throw DomainError("constraint_count must be at least node_count");
  if (!(r.constraint_lo > 0.0) || !(r.constraint_lo < r.constraint_hi) || !std::isfinite(r.constraint_hi)) {
    throw DomainError("constraint range needs 0 < lo < hi < inf");
  }
  if (r.dense_factor < 1) throw DomainError("dense_factor must be at least 1");
}

namespace {

double int_pow(double base, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

constexpr quad::Tolerance kWeightTol{1e-15, 1e-12, 200};

// Hat j restricted to segment k. Segment 0 is (0, t_1); segment k >= 1 is
// [t_k, t_{k+1}] in 1-based node terms. Returns a + b u.
struct Linear {
  double a;
  double b;
  double operator()(double u) const { return a + b * u; }
};

}  // namespace

std::vector<double> ExtremalLP::nodal_from_increments(const std::vector<double>& d) const {
  std::vector<double> h(d.size());
  double acc = 0.0;
  for (std::size_t j = 0; j < d.size(); ++j) {
    acc += d[j];
    h[j] = acc;
  }
  return h;
}

ExtremalLP build_lp(const ParamSet& p, const DiscretizationSpec& spec) {
  spec.validate();
  if (!(p.alpha() > 0.0)) throw DomainError("the extremal search needs alpha > 0");
  ExtremalLP out;
  out.disc = spec.resolved();
  const auto& d = out.disc;
  const int n = p.n();
  const double alpha = p.alpha();
  const std::size_t m = static_cast<std::size_t>(d.node_count);
  out.nodes = log_grid(d.t_min, d.t_max, d.node_count);
  const auto& tau = out.nodes;

  // Pieces of each hat: (segment lo, segment hi, node index, linear form).
  struct HatPiece {
    double lo;
    double hi;
    std::size_t node;
    Linear f;
  };
  std::vector<HatPiece> pieces;
  pieces.push_back({0.0, tau[0], 0, {0.0, 1.0 / tau[0]}});
  for (std::size_t k = 0; k + 1 < m; ++k) {
    const double a = tau[k];
    const double b = tau[k + 1];
    const double len = b - a;
    pieces.push_back({a, b, k, {b / len, -1.0 / len}});
    pieces.push_back({a, b, k + 1, {-a / len, 1.0 / len}});
  }

  // Objective.
  out.v.assign(m, 0.0);
  const double two_a = 2.0 * alpha;
  for (const auto& hp : pieces) {
    auto integrand = [&hp, two_a](double t) {
      const double weight = t <= 1.0 ? 1.0 / (1.0 + std::pow(t, two_a))
                                     : std::pow(t, -two_a) / (1.0 + std::pow(t, -two_a));
      return hp.f(t) / t * weight;
    };
    const auto r = quad::integrate_finite(integrand, hp.lo, hp.hi, kWeightTol);
    if (!r.converged) {
      throw Error("objective weight quadrature failed for node " + std::to_string(hp.node));
    }
    out.v[hp.node] += r.value;
  }
  out.tail_coeff = std::log1p(std::pow(tau[m - 1], -two_a)) / two_a;
  out.v[m - 1] += out.tail_coeff;

  // Constraint rows.
  const auto checks = log_grid(d.constraint_lo, d.constraint_hi, d.constraint_count);
  auto add_row = [&](double t_eval, double rhs) {
    std::vector<double> row(m, 0.0);
    for (const auto& hp : pieces) {
      if (hp.lo >= t_eval) continue;
      const double hi = std::min(hp.hi, t_eval);
      auto integrand = [&hp, t_eval, n](double u) { return hp.f(u) / u * int_pow(1.0 - u / t_eval, n - 1); };
      const auto r = quad::integrate_finite(integrand, hp.lo, hi, kWeightTol);
      if (!r.converged) {
        std::ostringstream msg;
        msg << "constraint weight quadrature failed at (row " << out.row_points.size() << ", node " << hp.node
            << "), t = " << t_eval;
        throw Error(msg.str());
      }
      row[hp.node] += r.value;
    }
    if (t_eval > tau[m - 1]) row[m - 1] += forms::kernel_w(n, tau[m - 1] / t_eval);
    out.row_points.push_back(t_eval);
    out.row_rhs.push_back(rhs);
    out.w.push_back(std::move(row));
  };
  if (d.mode == ConstraintMode::Sampled) {
    for (double t : checks) add_row(t, std::pow(t, alpha));
  } else {
    add_row(checks[0], std::pow(checks[0], alpha));
    for (std::size_t i = 0; i + 1 < checks.size(); ++i) add_row(checks[i + 1], std::pow(checks[i], alpha));
  }

  // Increment substitution: coefficients become suffix sums.
  out.problem.objective.assign(m, 0.0);
  double acc = 0.0;
  for (std::size_t j = m; j-- > 0;) {
    acc += out.v[j];
    out.problem.objective[j] = acc;
  }
  for (std::size_t i = 0; i < out.w.size(); ++i) {
    std::vector<double> row(m);
    double s = 0.0;
    for (std::size_t j = m; j-- > 0;) {
      s += out.w[i][j];
      row[j] = s;
    }
    out.problem.add_row(std::move(row), out.row_rhs[i]);
  }
  // Near 0 the LHS behaves like h_1 t / (n t_1), which t^alpha cannot dominate
  // once alpha > 1.
  if (alpha > 1.0) {
    std::vector<double> row(m, 0.0);
    row[0] = 1.0;
    out.problem.add_row(std::move(row), 0.0);
    out.origin_row = true;
  }
  return out;
}

MonotoneFn interpolant(const ExtremalLP& lp, const std::vector<double>& h) {
  return MonotoneFn::piecewise_linear(FormTag::h, lp.nodes, h, 0.0, RightRule::constant());
}

double tail_majorant(int n, double h_m, double slope, double t) {
  if (h_m <= 0.0) return 0.0;
  const double xc = std::min(1.0, h_m / (slope * t));
  return h_m * forms::kernel_w(n, xc) + slope * t * (1.0 - int_pow(1.0 - xc, n)) / n;
}

Certificate certify(const MonotoneFn& h, const ParamSet& p, const DiscretizationSpec& spec) {
  if (h.form() != FormTag::h) throw UnsupportedFormError("certify works on form-2 functions (h)");
  const DiscretizationSpec d = spec.resolved();
  const double alpha = p.alpha();
  const double tol = kCertificateTol;
  Certificate c;
  std::vector<std::string> notes;

  // Leading piece: int_0^1 (t x)^p / x (1 - x)^{n-1} dx = t^p B(p, n).
  const double end = h.first_piece_end();
  c.small_t_end = end;
  const PieceExpr& lead = h.pieces().front();
  bool small_ok = true;
  if (lead.log_coeff() != 0.0) {
    small_ok = false;
    notes.push_back("leading piece has a log term");
  }
  double bound = 0.0;
  for (const auto& term : lead.terms()) {
    if (term.coeff <= 0.0) continue;
    const bool grows = term.power > alpha + 1e-12;
    if (term.power < alpha - 1e-12 || (grows && std::isinf(end))) {
      small_ok = false;
      notes.push_back("leading piece term u^" + std::to_string(term.power) + " is not dominated by t^alpha");
      continue;
    }
    const double scale = grows ? std::pow(end, term.power - alpha) : 1.0;
    bound += term.coeff * specfun::beta(term.power, p.n()) * scale;
  }
  c.small_t_bound = small_ok ? bound : std::numeric_limits<double>::infinity();
  c.worst_ratio = c.small_t_bound;
  c.worst_t = std::isfinite(end) ? end : 1.0;

  const double t_hi = 10.0 * d.constraint_hi;
  c.checked_lo = 0.0;
  c.checked_hi = std::isfinite(end) ? std::max(end, t_hi) : end;

  if (std::isfinite(end) && end < t_hi) {
    const int count = d.dense_factor * d.constraint_count;
    c.dense_t = log_grid(end, t_hi, count);
    c.dense_ratio.reserve(c.dense_t.size());
    std::vector<double> lhs;
    lhs.reserve(c.dense_t.size());
    for (double t : c.dense_t) {
      const double value = forms::constraint_form2(h, p, t);
      lhs.push_back(value);
      const double r = value / std::pow(t, alpha);
      c.dense_ratio.push_back(r);
      if (r > c.worst_ratio) {
        c.worst_ratio = r;
        c.worst_t = t;
      }
      if (r > 1.0 + tol && c.violations.size() < 50) c.violations.push_back(t);
    }
    for (std::size_t k = 0; k + 1 < lhs.size(); ++k) {
      c.bracket_bound = std::max(c.bracket_bound, lhs[k + 1] / std::pow(c.dense_t[k], alpha));
    }
  }

  bool tail_ok = true;
  if (!std::isfinite(end)) {
    c.tail_needed = false;
  } else if (h.right().kind == RightRule::Kind::Constant && h.interpolation() == Interpolation::Linear &&
             h.is_nondecreasing()) {
    const double h_m = h.pieces().back().eval(1.0);
    double slope = 0.0;
    for (double b : h.nodes()) slope = std::max(slope, h.eval(b) / b);
    if (h_m > 0.0 && slope > 0.0) {
      const double from = c.checked_hi;
      const double t_star = h_m / slope * std::exp(1.0 / alpha - 1.0);
      const double t = std::max(from, t_star);
      c.tail_bound = h_m * (1.0 + std::log(slope * t / h_m)) / std::pow(t, alpha);
    }
    tail_ok = c.tail_bound <= 1.0 + tol;
    if (!tail_ok) notes.push_back("log-growth majorant exceeds t^alpha past the dense grid");
  } else {
    tail_ok = false;
    c.tail_bound = std::numeric_limits<double>::infinity();
    notes.push_back("tail is not a constant past a piecewise-linear h; no majorant available");
  }

  c.passed = small_ok && c.small_t_bound <= 1.0 + tol && c.worst_ratio <= 1.0 + tol && tail_ok;
  if (!c.violations.empty()) notes.push_back(std::to_string(c.violations.size()) + " dense points violate");
  for (std::size_t i = 0; i < notes.size(); ++i) c.note += (i ? "; " : "") + notes[i];
  return c;
}

SearchReport search(const ParamSet& p, const DiscretizationSpec& spec) {
  const ExtremalLP model = build_lp(p, spec);
  SearchReport rep(p, model.disc);
  rep.bound = specfun::conjectured_bound(FormTag::h, p);
  if (p.alpha() <= 0.5) {
    rep.warnings.push_back("alpha <= 1/2: outside the open regime");
  }

  const lp::LPSolution sol = lp::solve_lp(model.problem);
  rep.status = sol.status;
  rep.iterations = sol.iterations;
  if (sol.status != lp::Status::Optimal) {
    rep.optimum = std::numeric_limits<double>::quiet_NaN();
    rep.ratio = std::numeric_limits<double>::quiet_NaN();
    rep.verdict = SearchVerdict::Inconclusive;
    rep.warnings.push_back("LP status " + std::string(lp::to_string(sol.status)));
    return rep;
  }

  const std::vector<double> hv = model.nodal_from_increments(sol.x);
  const MonotoneFn h_star = interpolant(model, hv);
  rep.optimum = sol.optimum;
  rep.ratio = rep.optimum / rep.bound;
  rep.tail_term = model.tail_coeff * hv.back();
  rep.optimizer_nodes = model.nodes;
  rep.optimizer_values = hv;
  rep.target_of_optimizer = forms::target_form2(h_star, p);
  rep.certificate = certify(h_star, p, model.disc);

  if (rep.optimum <= rep.bound * (1.0 + kCertificateTol)) {
    rep.verdict = SearchVerdict::Supports;
  } else if (rep.certificate.passed) {
    rep.verdict = SearchVerdict::CandidateCounterexample;
  } else {
    rep.verdict = SearchVerdict::Inconclusive;
  }
  return rep;
}

}  // namespace ineqlab::extremal
