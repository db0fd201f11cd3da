#include "ineqlab/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "ineqlab/errors.hpp"

namespace ineqlab {

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::Degenerate: return "degenerate";
    case Regime::SubConjecture: return "sub-conjecture";
    case Regime::Proved: return "proved";
    case Regime::Conjectural: return "conjectural";
  }
  return "unknown";
}

ParamSet ParamSet::from_lambda(double lambda, int n) {
  if (!std::isfinite(lambda) || lambda < 0.0) {
    throw DomainError("lambda must be a finite nonnegative number, got " + std::to_string(lambda));
  }
  if (n < 2) {
    throw DomainError("n must be an integer >= 2, got " + std::to_string(n));
  }
  return ParamSet(lambda, n);
}

ParamSet ParamSet::from_alpha(double alpha, int n) {
  if (!std::isfinite(alpha) || alpha < 0.0) {
    throw DomainError("alpha must be a finite nonnegative number, got " + std::to_string(alpha));
  }
  return from_lambda(2.0 * alpha, n);
}

Regime ParamSet::regime() const {
  if (lambda_ == 0.0) return Regime::Degenerate;
  if (lambda_ < 0.5) return Regime::SubConjecture;
  if (lambda_ <= 1.0) return Regime::Proved;
  return Regime::Conjectural;
}

std::string_view to_string(FormTag f) {
  switch (f) {
    case FormTag::S: return "S";
    case FormTag::s: return "s";
    case FormTag::h: return "h";
    case FormTag::q: return "q";
  }
  return "?";
}

FormTag form_from_string(std::string_view name) {
  if (name == "S") return FormTag::S;
  if (name == "s") return FormTag::s;
  if (name == "h") return FormTag::h;
  if (name == "q") return FormTag::q;
  throw ParseError("unknown form tag '" + std::string(name) + "' (expected S, s, h or q)");
}

namespace specfun {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

// Valid for x >= 0.5.
double lanczos_ln_gamma(double x) {
  const double z = x - 1.0;
  double series = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    series += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosG + 0.5;
  constexpr double half_ln_two_pi = 0.91893853320467274178;
  return half_ln_two_pi + (z + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

double ln_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("ln_gamma requires a positive finite argument, got " + std::to_string(x));
  }
  // Exact integer anchors keep the zeros of ln Gamma clean.
  if (x == 1.0 || x == 2.0) return 0.0;
  if (x < 0.5) {
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
    return std::log(std::numbers::pi / std::sin(std::numbers::pi * x)) - lanczos_ln_gamma(1.0 - x);
  }
  return lanczos_ln_gamma(x);
}

double beta(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw DomainError("beta requires positive arguments");
  }
  return std::exp(ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b));
}

double product_constant(const ParamSet& p) {
  const int n = p.n();
  const double lambda = p.lambda();
  if (n > 30) {
    double log_sum = 0.0;
    for (int k = 1; k < n; ++k) log_sum += std::log1p(lambda / (2.0 * k));
    return std::exp(log_sum);
  }
  double prod = 1.0;
  for (int k = 1; k < n; ++k) prod *= 1.0 + lambda / (2.0 * k);
  return prod;
}

double sharp_coefficient(const ParamSet& p) {
  return 2.0 * (p.n() - 1) * product_constant(p);
}

double conjectured_bound(FormTag form, const ParamSet& p) {
  if (p.lambda() == 0.0) {
    throw DomainError("the conjectured bound is undefined at lambda = 0");
  }
  const double pi = std::numbers::pi;
  switch (form) {
    case FormTag::S:
      return pi * (p.n() - 1) / (2.0 * p.lambda()) * product_constant(p);
    case FormTag::h:
      return pi / (2.0 * p.alpha() * beta(p.alpha(), p.n()));
    case FormTag::q:
      return pi / beta(p.alpha(), p.n());
    case FormTag::s:
      break;
  }
  throw UnsupportedFormError("no stand-alone bound exists for the density form s; transform to S or h first");
}

}  // namespace specfun
}  // namespace ineqlab
