#pragma once

#include "ineqlab/params.hpp"

namespace ineqlab {

// Which of the three equivalent statements a function or bound belongs to.
// S: log-convex increasing growth function; s: its density s = t S'(t);
// h: rescaled density in the squared variable; q: derivative of h.
enum class FormTag { S, s, h, q };

std::string_view to_string(FormTag f);
FormTag form_from_string(std::string_view name);

namespace specfun {

// Natural log of the gamma function for x > 0 (Lanczos, g = 7, 9 terms).
double ln_gamma(double x);

// Euler beta function via ln_gamma.
double beta(double a, double b);

// prod_{k=1}^{n-1} (1 + lambda / (2k)); evaluated in log space for n > 30.
double product_constant(const ParamSet& p);

// c_{lambda,n} = 2 (n - 1) * product_constant(p).
double sharp_coefficient(const ParamSet& p);

// Right-hand constant of the inequality in the given form:
//   S -> pi (n-1) / (2 lambda) * P(lambda, n)
//   h -> pi / (2 alpha B(alpha, n))
//   q -> pi / B(alpha, n)
// Throws UnsupportedFormError for the density form s and DomainError for
// lambda == 0.
double conjectured_bound(FormTag form, const ParamSet& p);

}  // namespace specfun
}  // namespace ineqlab
