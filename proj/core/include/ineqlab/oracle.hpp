#pragma once

#include "ineqlab/monotone_fn.hpp"
#include "ineqlab/params.hpp"

namespace ineqlab::oracle {

// S(t) = c_{lambda,n} t^lambda, exact power on the default display grid.
MonotoneFn extremal_S(const ParamSet& p);

// h(u) = u^alpha / B(alpha, n); equality in the form-2 constraint at every t.
MonotoneFn extremal_h(const ParamSet& p);

struct Lemma1Bound {
  double constant = 0.0;
  double minimizer_a = 0.0;
};

// min over a in (0, 1) of 2 (n-1) / (a^lambda (1 - a^2)^{n-1}), in closed form:
//   2 (n-1) (1 + lambda / (2 (n-1)))^{n-1} (1 + 2 (n-1) / lambda)^{lambda/2}
// attained at a*^2 = lambda / (lambda + 2 (n-1)). lambda == 0 gives the limit
// 2 (n-1) with a* = 0.
Lemma1Bound lemma1_bound(const ParamSet& p);

// Target of the a-priori majorant power function: lemma1 constant * pi / (4 lambda).
double bound_est_S0(const ParamSet& p);

// b(x) = e^x for x <= 1, e x for x > 1.
double b_func(double x);

// pi (n-1) / (2 lambda) * prod_{k=1}^{n-1} b(lambda / (2k)).
double bound_est2(const ParamSet& p);

}  // namespace ineqlab::oracle
