#include "ineqlab/kernelops.hpp"

#include <cmath>
#include <string>

#include "ineqlab/errors.hpp"

namespace ineqlab::kernelops {

double phi(const ParamSet& p, double t) {
  if (t < 0.0) throw DomainError("phi is defined for t >= 0");
  const double two_l = 2.0 * p.lambda();
  if (t == 0.0) {
    if (two_l - 1.0 > 0.0) return 0.0;
    if (two_l - 1.0 == 0.0) return 1.0;
    throw DomainError("phi is unbounded at t = 0 for lambda < 1/2");
  }
  if (t <= 1.0) {
    const double u = std::pow(t, two_l);
    return std::pow(t, two_l - 1.0) / ((1.0 + u) * (1.0 + u));
  }
  // t^{2l-1} / (t^{4l} (1 + t^{-2l})^2) avoids overflowing t^{4l}.
  const double v = std::pow(t, -two_l);
  return std::pow(t, -two_l - 1.0) / ((1.0 + v) * (1.0 + v));
}

KClassExpr phi_as_kclass(const ParamSet& p) {
  const double lambda = p.lambda();
  if (!(lambda > 0.0) || lambda > 1.0) {
    throw RegimeError("phi_lambda belongs to K(2 lambda) only for 0 < lambda <= 1, got lambda = " +
                      std::to_string(lambda));
  }
  return KClassExpr(2.0 * lambda, {KClassTerm{1.0, 1.0 - 2.0 * lambda, 2.0, 2.0 * lambda}});
}

KClassExpr m_step(const KClassExpr& e) { return e.m_step(); }

KClassExpr m_power_phi(const ParamSet& p, int q) {
  if (q < 0) throw DomainError("the power q must be nonnegative");
  KClassExpr e = phi_as_kclass(p);
  for (int i = 0; i < q; ++i) e = e.m_step();
  return e;
}

double m_power_phi_value(const ParamSet& p, int q, double t) {
  if (p.lambda() <= 1.0) return m_power_phi(p, q).eval(t);
  if (q == 0) return phi(p, t);
  return m_apply_numeric([p](double x) { return phi(p, x); }, q, t).value;
}

double i_k(const RealFn& f, int k, double r, quad::Tolerance tol) {
  if (k < 0) throw DomainError("I_k requires k >= 0");
  if (!(r > 0.0)) throw DomainError("I_k requires r > 0");
  const double r2 = r * r;
  auto integrand = [&f, k, r2](double t) {
    double w = t;
    const double base = r2 - t * t;
    for (int i = 0; i < k; ++i) w *= base;
    return f(t) * w;
  };
  return quad::value_or_throw(quad::integrate_finite(integrand, 0.0, r, tol), "I_k");
}

namespace {

// Central difference at steps h, h/2, h/4 combined into an O(h^6) estimate.
double richardson(const RealFn& g, double x, double h, double* spread = nullptr) {
  auto central = [&](double s) { return (g(x + s) - g(x - s)) / (2.0 * s); };
  const double d0 = central(h);
  const double d1 = central(h / 2.0);
  const double d2 = central(h / 4.0);
  const double r1a = (4.0 * d1 - d0) / 3.0;
  const double r1b = (4.0 * d2 - d1) / 3.0;
  const double r2 = (16.0 * r1b - r1a) / 15.0;
  if (spread) *spread = std::abs(r2 - r1b);
  return r2;
}

enum class Operator { L, M };

NumericDerivative apply_nested(const RealFn& g, int depth, double r, double h, Operator op) {
  if (depth < 1) throw DomainError("operator power must be >= 1 for numeric application");
  if (!(r > 0.0)) throw DomainError("numeric operators need r > 0");

  NumericDerivative out;
  out.step = h > 0.0 ? h : default_step(depth, r);
  // Every nesting level shifts the evaluation point by up to one step.
  if (r - depth * out.step <= 0.0) {
    throw DomainError("step " + std::to_string(out.step) + " too large for " + std::to_string(depth) +
                      " nested differences at r = " + std::to_string(r));
  }
  out.step_warning = out.step > r / (depth + 1.0) || out.step < 1e-7 * r;

  const double step = out.step;
  RealFn level = g;
  for (int i = 1; i < depth; ++i) {
    if (op == Operator::L) {
      level = [prev = level, step](double x) { return richardson(prev, x, step) / x; };
    } else {
      level = [prev = level, step](double x) {
        return -richardson([&prev](double y) { return prev(y) / y; }, x, step);
      };
    }
  }

  double spread = 0.0;
  if (op == Operator::L) {
    out.value = richardson(level, r, step, &spread) / r;
    out.error_estimate = spread / r;
  } else {
    out.value = -richardson([&level](double y) { return level(y) / y; }, r, step, &spread);
    out.error_estimate = spread;
  }
  return out;
}

}  // namespace

double default_step(int nesting, double r) {
  const double noise = 1e-13 * std::pow(4.0, nesting);
  return r * std::pow(noise, 1.0 / (nesting + 6.0));
}

NumericDerivative l_apply_numeric(const RealFn& g, int p, double r, double h) {
  return apply_nested(g, p, r, h, Operator::L);
}

NumericDerivative m_apply_numeric(const RealFn& g, int q, double r, double h) {
  return apply_nested(g, q, r, h, Operator::M);
}

double loglog_slope(const RealFn& f, double t0, double t1) {
  if (!(t0 > 0.0) || !(t0 < t1)) throw DomainError("loglog_slope needs 0 < t0 < t1");
  const double f0 = f(t0);
  const double f1 = f(t1);
  if (!(f0 > 0.0) || !(f1 > 0.0)) {
    throw DomainError("loglog_slope needs positive samples, got f(t0) = " + std::to_string(f0) +
                      ", f(t1) = " + std::to_string(f1));
  }
  return (std::log(f1) - std::log(f0)) / (std::log(t1) - std::log(t0));
}

double boundary_product(int p_pow, int q_pow, const ParamSet& par, const RealFn& T_fn, double t) {
  const int k = par.n() - 2;
  auto ik = [&T_fn, k](double r) { return i_k(T_fn, k, r); };
  const double l_part = p_pow == 1 ? ik(t) : l_apply_numeric(ik, p_pow - 1, t).value;
  return l_part * m_power_phi_value(par, q_pow, t) / t;
}

BoundarySlopes boundary_decay_check(int p_pow, int q_pow, const ParamSet& par, const RealFn& T_fn) {
  if (p_pow < 1 || q_pow < 0 || p_pow + q_pow != par.n() - 1) {
    throw DomainError("boundary check needs p >= 1, q >= 0 and p + q = n - 1");
  }
  auto product = [&](double t) { return boundary_product(p_pow, q_pow, par, T_fn, t); };
  BoundarySlopes out;
  out.slope_at_zero = loglog_slope(product, 1e-4, 1e-3);
  out.slope_at_infinity = loglog_slope(product, 1e3, 1e4);
  out.value_at_large = product(1e6);
  out.expected_at_zero = 3.0 * par.lambda();
  out.expected_at_infinity = -par.lambda();
  return out;
}

}  // namespace ineqlab::kernelops
