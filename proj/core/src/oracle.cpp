#include "ineqlab/oracle.hpp"

#include <cmath>
#include <numbers>

#include "ineqlab/errors.hpp"
#include "ineqlab/specfun.hpp"

namespace ineqlab::oracle {

namespace {

std::vector<double> display_grid() { return log_grid(1e-3, 1e3, 41); }

void require_positive_lambda(const ParamSet& p, const char* what) {
  if (!(p.lambda() > 0.0)) throw DomainError(std::string(what) + " needs lambda > 0");
}

}  // namespace

MonotoneFn extremal_S(const ParamSet& p) {
  return MonotoneFn::power_law(FormTag::S, specfun::sharp_coefficient(p), p.lambda(), display_grid());
}

MonotoneFn extremal_h(const ParamSet& p) {
  require_positive_lambda(p, "extremal_h");
  const double kappa = 1.0 / specfun::beta(p.alpha(), p.n());
  return MonotoneFn::power_law(FormTag::h, kappa, p.alpha(), display_grid());
}

Lemma1Bound lemma1_bound(const ParamSet& p) {
  const double m = p.n() - 1.0;
  const double lambda = p.lambda();
  if (lambda == 0.0) return {2.0 * m, 0.0};
  const double constant =
      2.0 * m * std::pow(1.0 + lambda / (2.0 * m), m) * std::pow(1.0 + 2.0 * m / lambda, lambda / 2.0);
  return {constant, std::sqrt(lambda / (lambda + 2.0 * m))};
}

double bound_est_S0(const ParamSet& p) {
  require_positive_lambda(p, "bound_est_S0");
  return lemma1_bound(p).constant * std::numbers::pi / (4.0 * p.lambda());
}

double b_func(double x) {
  if (!(x >= 0.0)) throw DomainError("b_func needs x >= 0");
  return x <= 1.0 ? std::exp(x) : std::numbers::e * x;
}

double bound_est2(const ParamSet& p) {
  require_positive_lambda(p, "bound_est2");
  double prod = 1.0;
  for (int k = 1; k < p.n(); ++k) prod *= b_func(p.lambda() / (2.0 * k));
  return std::numbers::pi * (p.n() - 1) / (2.0 * p.lambda()) * prod;
}

}  // namespace ineqlab::oracle
