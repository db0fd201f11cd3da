#include "ineqlab/forms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ineqlab/errors.hpp"
#include "ineqlab/kernelops.hpp"
#include "ineqlab/specfun.hpp"

namespace ineqlab::forms {

namespace {

double int_pow(double base, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

// Kinks of f mapped into x = kink / t on (0, 1).
std::vector<double> scaled_kinks(const MonotoneFn& f, double t) {
  std::vector<double> out;
  for (double k : f.kinks()) {
    const double x = k / t;
    if (x > 0.0 && x < 1.0) out.push_back(x);
  }
  return out;
}

quad::Tolerance relative_to(quad::Tolerance tol, double reference) {
  if (reference > 0.0 && std::isfinite(reference)) tol.abs *= reference;
  return tol;
}

void require_positive_t(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("constraint functionals need a finite t > 0");
}

int chain_index(FormTag f) {
  switch (f) {
    case FormTag::S: return 0;
    case FormTag::s: return 1;
    case FormTag::h: return 2;
    case FormTag::q: return 3;
  }
  return 0;
}

constexpr FormTag kChain[] = {FormTag::S, FormTag::s, FormTag::h, FormTag::q};

// Antiderivative pieces made continuous from a zero value at t = 0.
std::vector<PieceExpr> continuous_primitive(const MonotoneFn& f, bool over_x) {
  const auto& nodes = f.nodes();
  const auto& pieces = f.pieces();
  std::vector<PieceExpr> out;
  out.reserve(pieces.size());
  for (std::size_t j = 0; j < pieces.size(); ++j) {
    PieceExpr prim = over_x ? pieces[j].antiderivative_over_x() : pieces[j].antiderivative();
    if (j == 0) {
      if (prim.limit_at_zero() != 0.0) {
        throw TransformError("the integral diverges at t = 0 (the integrand is not integrable there)");
      }
    } else {
      const double t = nodes[j - 1];
      prim = prim.plus_constant(out.back().eval(t) - prim.eval(t));
    }
    out.push_back(std::move(prim));
  }
  return out;
}

TransformResult single_step(const MonotoneFn& f, FormTag to, const ParamSet& p) {
  const double four_n1 = 4.0 * (p.n() - 1);
  std::vector<std::string> warnings;
  std::vector<double> nodes = f.nodes();
  std::vector<PieceExpr> pieces;

  if (f.form() == FormTag::S && to == FormTag::s) {
    if (!f.is_log_convex_on_nodes()) {
      warnings.push_back("S is not log-convex on its nodes; s = t S'(t) may fail to be increasing");
    }
    for (const auto& piece : f.pieces()) pieces.push_back(piece.x_derivative());
  } else if (f.form() == FormTag::s && to == FormTag::S) {
    if (f.left() != 0.0) throw TransformError("s(0) > 0 makes S(x) = int_0^x s(t)/t dt diverge");
    pieces = continuous_primitive(f, true);
  } else if (f.form() == FormTag::s && to == FormTag::h) {
    if (f.left() != 0.0) warnings.push_back("s(0) > 0 gives h(0) > 0, outside the form-2 class");
    for (auto& t : nodes) t *= t;
    for (const auto& piece : f.pieces()) pieces.push_back(piece.sqrt_substituted().scaled(1.0 / four_n1));
  } else if (f.form() == FormTag::h && to == FormTag::s) {
    for (auto& t : nodes) t = std::sqrt(t);
    for (const auto& piece : f.pieces()) pieces.push_back(piece.square_substituted().scaled(four_n1));
  } else if (f.form() == FormTag::h && to == FormTag::q) {
    for (std::size_t j = 0; j < f.nodes().size(); ++j) {
      const double t = f.nodes()[j];
      const double jump = f.pieces()[j + 1].eval(t) - f.pieces()[j].eval(t);
      if (std::abs(jump) > 1e-12 * std::max(1.0, std::abs(f.pieces()[j].eval(t)))) {
        warnings.push_back("h jumps at a node; its derivative q drops the jump");
        break;
      }
    }
    for (const auto& piece : f.pieces()) pieces.push_back(piece.derivative_expr());
  } else if (f.form() == FormTag::q && to == FormTag::h) {
    pieces = continuous_primitive(f, false);
  } else {
    throw TransformError("no direct edge from " + std::string(to_string(f.form())) + " to " +
                         std::string(to_string(to)));
  }

  MonotoneFn out = MonotoneFn::from_pieces(to, std::move(nodes), std::move(pieces));
  bool monotone = true;
  if (to == FormTag::q) {
    const auto v = out.values();
    monotone = out.left() >= 0.0 && std::all_of(v.begin(), v.end(), [](double x) { return x >= -1e-300; });
    if (!monotone) warnings.push_back("q takes negative values (h is not increasing)");
  } else {
    monotone = out.is_nondecreasing();
    if (!monotone) {
      warnings.push_back(std::string(to_string(to)) + " is not increasing");
    }
  }
  return {std::move(out), monotone, std::move(warnings)};
}

}  // namespace

double eval_monotone(const MonotoneFn& f, double t) { return f.eval(t); }

double constraint_form1(const MonotoneFn& S, const ParamSet& p, double t, quad::Tolerance tol) {
  require_positive_t(t);
  const int k = p.n() - 2;
  auto integrand = [&S, t, k](double x) { return S.eval(t * x) * int_pow(1.0 - x * x, k) * x; };
  const auto kinks = scaled_kinks(S, t);
  const auto r = quad::integrate_finite(integrand, 0.0, 1.0, relative_to(tol, std::pow(t, p.lambda())), kinks);
  return quad::value_or_throw(r, "constraint_form1");
}

double target_form1(const MonotoneFn& S, const ParamSet& p, quad::Tolerance tol) {
  auto integrand = [&S, &p](double t) {
    const double s = S.eval(t);
    return s == 0.0 ? 0.0 : s * kernelops::phi(p, t);
  };
  const auto kinks = S.kinks();
  return quad::value_or_throw(quad::integrate_halfline(integrand, tol, kinks), "target_form1");
}

double constraint_form2(const MonotoneFn& h, const ParamSet& p, double t, quad::Tolerance tol) {
  require_positive_t(t);
  if (h.left() != 0.0) {
    throw DomainError("form-2 constraint diverges: h(0) must be 0 (the kernel behaves like h(0)/x)");
  }
  const int k = p.n() - 1;
  auto integrand = [&h, t, k](double x) { return h.eval(t * x) / x * int_pow(1.0 - x, k); };
  const auto kinks = scaled_kinks(h, t);
  const auto r = quad::integrate_finite(integrand, 0.0, 1.0, relative_to(tol, std::pow(t, p.alpha())), kinks);
  return quad::value_or_throw(r, "constraint_form2");
}

double target_form2(const MonotoneFn& h, const ParamSet& p, quad::Tolerance tol) {
  const double two_a = 2.0 * p.alpha();
  auto integrand = [&h, two_a](double t) {
    const double v = h.eval(t);
    if (v == 0.0) return 0.0;
    if (t <= 1.0) return v / t / (1.0 + std::pow(t, two_a));
    const double w = std::pow(t, -two_a);
    return v / t * w / (1.0 + w);
  };
  return quad::value_or_throw(quad::integrate_halfline(integrand, tol, h.kinks()), "target_form2");
}

double kernel_w(int n, double x) {
  if (n < 2) throw DomainError("kernel_w needs n >= 2");
  if (!(x > 0.0) || x > 1.0) throw DomainError("kernel_w needs 0 < x <= 1");
  if (x == 1.0) return 0.0;
  const double y = 1.0 - x;
  double sum = 0.0;
  double yj = 1.0;
  for (int j = 1; j < n; ++j) {
    yj *= y;
    sum += yj / j;
  }
  return -std::log(x) - sum;
}

double kernel_w_binomial(int n, double x) {
  if (n < 2) throw DomainError("kernel_w needs n >= 2");
  if (!(x > 0.0) || x > 1.0) throw DomainError("kernel_w needs 0 < x <= 1");
  double sum = 0.0;
  double binom = 1.0;
  double xk = 1.0;
  for (int k = 1; k < n; ++k) {
    binom = binom * (n - k) / k;
    xk *= x;
    sum += binom * ((k % 2 == 0) ? 1.0 : -1.0) * (1.0 - xk) / k;
  }
  return -std::log(x) + sum;
}

double constraint_form3(const MonotoneFn& q, const ParamSet& p, double t, quad::Tolerance tol) {
  require_positive_t(t);
  const int n = p.n();
  auto integrand = [&q, t, n](double x) {
    const double v = q.eval(t * x);
    return v == 0.0 ? 0.0 : kernel_w(n, x) * v;
  };
  const auto kinks = scaled_kinks(q, t);
  const auto r =
      quad::integrate_finite(integrand, 0.0, 1.0, relative_to(tol, std::pow(t, p.alpha() - 1.0)), kinks);
  return quad::value_or_throw(r, "constraint_form3");
}

double target_form3(const MonotoneFn& q, const ParamSet& p, quad::Tolerance tol) {
  const double two_a = 2.0 * p.alpha();
  auto integrand = [&q, two_a](double t) {
    const double v = q.eval(t);
    if (v == 0.0) return 0.0;
    const double weight =
        t < 1.0 ? -two_a * std::log(t) + std::log1p(std::pow(t, two_a)) : std::log1p(std::pow(t, -two_a));
    return v * weight;
  };
  return quad::value_or_throw(quad::integrate_halfline(integrand, tol, q.kinks()), "target_form3");
}

double constraint_ratio(const MonotoneFn& f, const ParamSet& p, double t, quad::Tolerance tol) {
  switch (f.form()) {
    case FormTag::S: return constraint_form1(f, p, t, tol) / std::pow(t, p.lambda());
    case FormTag::s: return constraint_ratio(transform(f, FormTag::S, p).fn, p, t, tol);
    case FormTag::h: return constraint_form2(f, p, t, tol) / std::pow(t, p.alpha());
    case FormTag::q: return constraint_form3(f, p, t, tol) / std::pow(t, p.alpha() - 1.0);
  }
  return 0.0;
}

double target(const MonotoneFn& f, const ParamSet& p, quad::Tolerance tol) {
  switch (f.form()) {
    case FormTag::S: return target_form1(f, p, tol);
    case FormTag::s: return target_form1(transform(f, FormTag::S, p).fn, p, tol);
    case FormTag::h: return target_form2(f, p, tol);
    case FormTag::q: return target_form3(f, p, tol);
  }
  return 0.0;
}

TransformResult transform(const MonotoneFn& f, FormTag to, const ParamSet& p) {
  const int from_i = chain_index(f.form());
  const int to_i = chain_index(to);
  if (from_i == to_i) {
    throw TransformError("transform requested from " + std::string(to_string(to)) + " to itself");
  }
  const int step = to_i > from_i ? 1 : -1;
  TransformResult acc{f, true, {}};
  for (int i = from_i; i != to_i; i += step) {
    TransformResult next = single_step(acc.fn, kChain[i + step], p);
    acc.fn = std::move(next.fn);
    acc.monotone = next.monotone;
    for (auto& w : next.warnings) acc.warnings.push_back(std::move(w));
  }
  return acc;
}

bool Verdict::feasible() const { return point_errors.empty() && worst_constraint_ratio <= 1.0 + tol; }

bool Verdict::conjecture_consistent() const { return target_value <= bound * (1.0 + tol); }

std::vector<double> default_t_grid() { return log_grid(1e-3, 1e3, 41); }

Verdict check(const MonotoneFn& f, const ParamSet& p, const std::vector<double>& t_grid, double tol) {
  if (t_grid.empty()) throw DomainError("check needs a nonempty t grid");
  const MonotoneFn work = f.form() == FormTag::s ? transform(f, FormTag::S, p).fn : f;
  const FormTag bound_form = work.form();

  Verdict v{p, f.form(), {}, {}, {}};
  v.constraint_grid = t_grid;
  v.tol = tol;
  v.worst_constraint_ratio = 0.0;
  for (double t : t_grid) {
    try {
      const double r = constraint_ratio(work, p, t);
      v.ratios.push_back(r);
      if (r > v.worst_constraint_ratio) {
        v.worst_constraint_ratio = r;
        v.worst_t = t;
      }
    } catch (const Error& e) {
      v.ratios.push_back(std::numeric_limits<double>::quiet_NaN());
      std::ostringstream msg;
      msg << "t=" << t << ": " << e.what();
      v.point_errors.push_back(msg.str());
    }
  }
  v.target_value = target(work, p);
  v.bound = specfun::conjectured_bound(bound_form, p);
  v.margin = v.bound - v.target_value;
  return v;
}

}  // namespace ineqlab::forms
