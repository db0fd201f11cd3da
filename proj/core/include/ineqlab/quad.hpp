#pragma once

#include <functional>
#include <span>

namespace ineqlab::quad {

using Integrand = std::function<double(double)>;

struct Tolerance {
  double abs = 1e-12;
  double rel = 1e-10;
  int max_intervals = 2000;
};

struct QuadResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  int subdivisions = 0;
  bool converged = false;
};

// Globally adaptive 21-point Gauss-Kronrod integration of f over [a, b].
// The rule is open, so f is never evaluated at a or b and integrable endpoint
// singularities (x^{-1/2}, log x) converge without special handling.
//
// Optional interior breakpoints seed the initial partition; pass the kinks of
// piecewise-defined integrands there. Points outside (a, b) are ignored.
//
// A non-finite integrand value throws QuadratureError. Exhausting the interval
// budget returns converged == false with the best value so far.
//
// Integrands must be free of side effects.
QuadResult integrate_finite(const Integrand& f, double a, double b, Tolerance tol = {},
                            std::span<const double> breakpoints = {});

// Integral of f over (0, +inf): [0, 1] directly, [1, inf) through t = 1/u.
// Breakpoints are given in the original variable t.
QuadResult integrate_halfline(const Integrand& f, Tolerance tol = {},
                              std::span<const double> breakpoints = {});

// Value of a converged result; throws QuadratureError otherwise.
double value_or_throw(const QuadResult& r, const char* what);

}  // namespace ineqlab::quad
