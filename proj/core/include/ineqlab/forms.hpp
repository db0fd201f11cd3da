#pragma once

#include <string>
#include <vector>

#include "ineqlab/monotone_fn.hpp"
#include "ineqlab/params.hpp"
#include "ineqlab/quad.hpp"

namespace ineqlab::forms {

double eval_monotone(const MonotoneFn& f, double t);

// Form 1 (growth function S, log-convex and increasing):
//   constraint  int_0^1 S(t x) (1 - x^2)^{n-2} x dx   <=  t^lambda
//   target      int_0^inf S(t) phi_lambda(t) dt
double constraint_form1(const MonotoneFn& S, const ParamSet& p, double t, quad::Tolerance tol = {});
double target_form1(const MonotoneFn& S, const ParamSet& p, quad::Tolerance tol = {});

// Form 2 (increasing h with h(0) = 0):
//   constraint  int_0^1 h(t x) / x (1 - x)^{n-1} dx   <=  t^alpha
//   target      int_0^inf h(t) / t dt / (1 + t^{2 alpha})
double constraint_form2(const MonotoneFn& h, const ParamSet& p, double t, quad::Tolerance tol = {});
double target_form2(const MonotoneFn& h, const ParamSet& p, quad::Tolerance tol = {});

// W_n(x) = int_x^1 (1 - y)^{n-1} dy / y = -ln x - sum_{j=1}^{n-1} (1 - x)^j / j
double kernel_w(int n, double x);

// The same kernel expanded in powers of x:
//   -ln x + sum_{k=1}^{n-1} C(n-1, k) (-1)^k (1 - x^k) / k
double kernel_w_binomial(int n, double x);

// Form 3 (nonnegative density q = h'):
//   constraint  int_0^1 W_n(x) q(t x) dx   <=  t^{alpha - 1}
//   target      int_0^inf q(t) ln(1 + t^{-2 alpha}) dt
double constraint_form3(const MonotoneFn& q, const ParamSet& p, double t, quad::Tolerance tol = {});
double target_form3(const MonotoneFn& q, const ParamSet& p, quad::Tolerance tol = {});

// Constraint value divided by the power of t it is compared against, dispatched
// on f.form(). Form s is routed through S.
double constraint_ratio(const MonotoneFn& f, const ParamSet& p, double t, quad::Tolerance tol = {});
double target(const MonotoneFn& f, const ParamSet& p, quad::Tolerance tol = {});

struct TransformResult {
  MonotoneFn fn;
  bool monotone = true;               // output passes MonotoneFn::is_nondecreasing (or q >= 0)
  std::vector<std::string> warnings;  // e.g. S not log-convex, so s fails monotonicity
};

// Exact transform along the chain S <-> s <-> h <-> q; multi-step requests
// compose single edges. S -> s is s(t) = t S'(t); s -> S integrates s(t)/t;
// s -> h is h(x^2) = s(x) / (4 (n - 1)); h -> q differentiates.
// TransformError when to == f.form() or the integral leaves the piece family.
TransformResult transform(const MonotoneFn& f, FormTag to, const ParamSet& p);

struct Verdict {
  ParamSet params;
  FormTag form;
  std::vector<double> constraint_grid;
  std::vector<double> ratios;             // NaN where the point failed
  std::vector<std::string> point_errors;  // "t=<value>: <message>"
  double worst_constraint_ratio = 0.0;
  double worst_t = 0.0;
  double target_value = 0.0;
  double bound = 0.0;
  double margin = 0.0;
  double tol = 1e-6;

  bool feasible() const;
  bool conjecture_consistent() const;
};

// 41 log-spaced points on [1e-3, 1e3].
std::vector<double> default_t_grid();

Verdict check(const MonotoneFn& f, const ParamSet& p, const std::vector<double>& t_grid, double tol = 1e-6);

}  // namespace ineqlab::forms
