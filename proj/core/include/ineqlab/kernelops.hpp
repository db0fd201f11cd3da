#pragma once

#include <functional>

#include "ineqlab/kclass.hpp"
#include "ineqlab/params.hpp"
#include "ineqlab/quad.hpp"

namespace ineqlab::kernelops {

using RealFn = std::function<double(double)>;

// phi_lambda(t) = t^{2 lambda - 1} / (1 + t^{2 lambda})^2
double phi(const ParamSet& p, double t);

// phi_lambda as the single K(2 lambda) term 1/(t^{1-2 lambda} (1+t^{2 lambda})^2).
// Throws RegimeError for lambda > 1, where 1 - 2 lambda < -1 leaves the class.
KClassExpr phi_as_kclass(const ParamSet& p);

KClassExpr m_step(const KClassExpr& e);

// q-fold M applied symbolically to phi_lambda; every coefficient is a product
// of nonnegative factors when lambda <= 1.
KClassExpr m_power_phi(const ParamSet& p, int q);

// M^q[phi_lambda](t): symbolic for lambda <= 1, nested numeric otherwise.
double m_power_phi_value(const ParamSet& p, int q, double t);

// Tolerance used for I_k: purely relative, because the boundary checks sample
// I_k where it is as small as 1e-20.
inline constexpr quad::Tolerance kIkTolerance{0.0, 1e-13, 4000};

// I_k(r; f) = int_0^r f(t) (r^2 - t^2)^k t dt
double i_k(const RealFn& f, int k, double r, quad::Tolerance tol = kIkTolerance);

struct NumericDerivative {
  double value = 0.0;
  double error_estimate = 0.0;  // spread of the last two Richardson columns at the outer level
  double step = 0.0;
  bool step_warning = false;    // step outside the range where the error model holds
};

// Default step for p nested Richardson-extrapolated central differences at r:
// balances the O(h^6) truncation error against noise eps / (h/4)^p.
double default_step(int nesting, double r);

// L^p[g](r) with L[g](r) = g'(r) / r. A step h <= 0 selects default_step.
NumericDerivative l_apply_numeric(const RealFn& g, int p, double r, double h = 0.0);

// M^q[g](r) with M[g](r) = -(g(t)/t)'|_{t=r}. A step h <= 0 selects default_step.
NumericDerivative m_apply_numeric(const RealFn& g, int q, double r, double h = 0.0);

// (ln f(t1) - ln f(t0)) / (ln t1 - ln t0); DomainError on a nonpositive sample.
double loglog_slope(const RealFn& f, double t0, double t1);

struct BoundarySlopes {
  double slope_at_zero = 0.0;      // measured on [1e-4, 1e-3]
  double slope_at_infinity = 0.0;  // measured on [1e3, 1e4]
  double value_at_large = 0.0;     // product at t = 1e6
  double expected_at_zero = 0.0;   // 3 lambda
  double expected_at_infinity = 0.0;  // -lambda
};

// The boundary product (1/t) L^{p-1}[I_{n-2}(.; T)](t) M^q[phi_lambda](t) for
// p + q = n - 1, p >= 1, sampled near 0 and +inf. T must satisfy the rescaled
// constraint (T = S / (2(n-1)) for a feasible S).
BoundarySlopes boundary_decay_check(int p_pow, int q_pow, const ParamSet& par, const RealFn& T_fn);

// The product itself, exposed for the integration-by-parts checks.
double boundary_product(int p_pow, int q_pow, const ParamSet& par, const RealFn& T_fn, double t);

}  // namespace ineqlab::kernelops
