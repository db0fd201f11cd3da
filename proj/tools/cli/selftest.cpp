#include "selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "ineqlab/errors.hpp"
#include "ineqlab/extremal.hpp"
#include "ineqlab/forms.hpp"
#include "ineqlab/kernelops.hpp"
#include "ineqlab/lp.hpp"
#include "ineqlab/oracle.hpp"
#include "ineqlab/quad.hpp"
#include "ineqlab/specfun.hpp"
#include "samples.hpp"

namespace ineqlab::cli {

namespace {

using std::numbers::pi;

double rel(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

// Distance of x outside [lo, hi]; 0 inside.
double outside(double x, double lo, double hi) { return x < lo ? lo - x : (x > hi ? x - hi : 0.0); }

double factorial(int k) {
  double r = 1.0;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

Measure sharp_constraint() {
  double worst = 0.0;
  for (double lambda : {0.5, 1.7}) {
    for (int n : {2, 5}) {
      const auto p = ParamSet::from_lambda(lambda, n);
      const auto S = oracle::extremal_S(p);
      for (double t : {0.1, 1.0, 10.0}) worst = std::max(worst, std::abs(forms::constraint_ratio(S, p, t) - 1.0));
    }
  }
  return {worst, "max |ratio - 1| over lambda {0.5,1.7}, n {2,5}, t {0.1,1,10}"};
}

Measure sharp_target() {
  double worst = 0.0;
  for (double lambda : {0.5, 1.7}) {
    for (int n : {2, 5}) {
      const auto p = ParamSet::from_lambda(lambda, n);
      worst = std::max(worst, rel(forms::target_form1(oracle::extremal_S(p), p),
                                  specfun::conjectured_bound(FormTag::S, p)));
    }
  }
  return {worst, "relative error of target against R1"};
}

Measure r1_beta() {
  double worst = 0.0;
  for (double lambda : {0.5, 1.0, 1.7, 3.0}) {
    for (int n : {2, 3, 5}) {
      const auto p = ParamSet::from_lambda(lambda, n);
      const double closed = pi * (n - 1) / (lambda * lambda) / specfun::beta(lambda / 2.0, n);
      worst = std::max(worst, rel(specfun::conjectured_bound(FormTag::S, p), closed));
    }
  }
  return {worst, "R1 product form vs Beta form"};
}

Measure r2_r3() {
  double worst = 0.0;
  for (double alpha : {0.25, 0.5, 0.85, 1.5}) {
    for (int n : {2, 3, 5}) {
      const auto p = ParamSet::from_alpha(alpha, n);
      const double r2 = specfun::conjectured_bound(FormTag::h, p);
      worst = std::max(worst, rel(r2, pi / (2.0 * alpha * specfun::beta(alpha, n))));
      worst = std::max(worst, rel(specfun::conjectured_bound(FormTag::q, p) / (2.0 * alpha), r2));
    }
  }
  return {worst, "R2 == pi/(2 alpha B) == R3/(2 alpha)"};
}

Measure extremal_h_constraint() {
  double worst = 0.0;
  for (double alpha : {0.5, 1.0, 1.5}) {
    const auto p = ParamSet::from_alpha(alpha, 3);
    const auto h = oracle::extremal_h(p);
    for (double t : {0.01, 1.0, 100.0}) worst = std::max(worst, std::abs(forms::constraint_ratio(h, p, t) - 1.0));
  }
  return {worst, "extremal h has ratio 1"};
}

Measure extremal_h_target() {
  double worst = 0.0;
  for (double alpha : {0.5, 1.0, 1.5}) {
    const auto p = ParamSet::from_alpha(alpha, 3);
    worst = std::max(worst, rel(forms::target_form2(oracle::extremal_h(p), p),
                                specfun::conjectured_bound(FormTag::h, p)));
  }
  return {worst, "target of extremal h vs R2"};
}

Measure lkp3() {
  const int k = 2;
  const int pw = 1;
  const double r = 0.7;
  auto f = [](double t) { return std::pow(t, 1.3); };
  auto ik = [&](double x) { return kernelops::i_k(f, k, x); };
  const double lhs = kernelops::l_apply_numeric(ik, pw, r).value;
  const double rhs = std::pow(2.0, pw) * factorial(k) / factorial(k - pw) * kernelops::i_k(f, k - pw, r);
  return {rel(lhs, rhs), fmt("L[I_2](0.7) = %.10g vs %.10g", lhs, rhs)};
}

Measure lkp4() {
  const int k = 2;
  const double r = 1.5;
  auto f = [](double t) { return t; };
  auto ik = [&](double x) { return kernelops::i_k(f, k, x); };
  const double lhs = kernelops::l_apply_numeric(ik, k + 1, r).value;
  const double rhs = std::pow(2.0, k) * factorial(k) * f(r);
  return {rel(lhs, rhs), fmt("L^3[I_2](1.5) = %.10g vs %.10g", lhs, rhs)};
}

Measure lemma2() {
  // (lambda, n) = (1, 2), T = S/2 = 1.5 t: int L[I_0] phi == int I_0 M[phi].
  const auto p = ParamSet::from_lambda(1.0, 2);
  auto T = [](double t) { return 1.5 * t; };
  auto g = [&](double r) { return kernelops::i_k(T, 0, r); };
  auto left = [&](double t) { return kernelops::l_apply_numeric(g, 1, t).value * kernelops::phi(p, t); };
  auto right = [&](double t) { return g(t) * kernelops::m_power_phi_value(p, 1, t); };
  const double a = quad::value_or_throw(quad::integrate_halfline(left, {1e-12, 1e-9, 2000}), "lemma2 left");
  const double b = quad::value_or_throw(quad::integrate_halfline(right, {1e-12, 1e-9, 2000}), "lemma2 right");
  return {rel(a, b), fmt("%.10g vs %.10g", a, b)};
}

Measure m_positive() {
  double worst = 0.0;
  for (double lambda : {0.3, 0.5, 0.8, 1.0}) {
    const auto p = ParamSet::from_lambda(lambda, 2);
    for (int q = 0; q <= 6; ++q) worst = std::max(worst, -kernelops::m_power_phi(p, q).min_coeff());
  }
  return {std::max(worst, 0.0), "most negative coefficient of M^q[phi], q <= 6"};
}

Measure m_symbolic() {
  const auto p = ParamSet::from_lambda(0.5, 2);
  const double sym = kernelops::m_power_phi(p, 2).eval(2.0);
  const double num = kernelops::m_apply_numeric([&](double t) { return kernelops::phi(p, t); }, 2, 2.0).value;
  return {rel(num, sym), fmt("symbolic %.10g, numeric %.10g", sym, num)};
}

Measure slope_inf() {
  const auto p = ParamSet::from_lambda(1.0, 2);
  const auto e = kernelops::m_power_phi(p, 1);
  const double s = kernelops::loglog_slope([&](double t) { return e.eval(t); }, 1e3, 1e4);
  return {std::abs(s + 5.0), fmt("slope %.6f, expected %.1f", s, -5.0)};
}

Measure slope_zero() {
  const auto p = ParamSet::from_lambda(0.5, 2);
  const auto e = kernelops::m_power_phi(p, 1);
  const double s = kernelops::loglog_slope([&](double t) { return e.eval(t); }, 1e-4, 1e-3);
  return {std::abs(s + 2.0), fmt("slope %.6f, expected %.1f", s, -2.0)};
}

kernelops::BoundarySlopes lemma5() {
  const auto p = ParamSet::from_lambda(1.0, 2);
  return kernelops::boundary_decay_check(1, 0, p, [](double t) { return 1.5 * t; });
}

Measure lemma5_zero() {
  const auto b = lemma5();
  return {std::abs(b.slope_at_zero - b.expected_at_zero), fmt("slope %.6f, expected %.1f", b.slope_at_zero, b.expected_at_zero)};
}

Measure lemma5_inf() {
  const auto b = lemma5();
  return {std::abs(b.slope_at_infinity - b.expected_at_infinity),
          fmt("slope %.6f, expected %.1f", b.slope_at_infinity, b.expected_at_infinity)};
}

Measure est_s() {
  const auto p = ParamSet::from_lambda(1.0, 2);
  const auto b = oracle::lemma1_bound(p);
  double grid_min = 1e300;
  for (int i = 1; i < 200000; ++i) {
    const double a = i / 200000.0;
    grid_min = std::min(grid_min, 2.0 / (a * (1.0 - a * a)));
  }
  const double err = std::max(rel(b.constant, 3.0 * std::sqrt(3.0)), rel(b.constant, grid_min));
  return {err, fmt("constant %.10g, grid minimum %.10g", b.constant, grid_min)};
}

Measure est_an() {
  // 2 (n-1) I_{n-2}(r; T) == r^{lambda + 2(n-1)} for the extremal T = S / (2 (n-1)).
  const auto p = ParamSet::from_lambda(1.7, 3);
  const auto S = oracle::extremal_S(p);
  auto T = [&](double t) { return S.eval(t) / 4.0; };
  double worst = 0.0;
  for (double r : {0.5, 2.0}) {
    const double lhs = 4.0 * kernelops::i_k(T, 1, r);
    worst = std::max(worst, rel(lhs, std::pow(r, 1.7 + 4.0)));
  }
  return {worst, "lambda 1.7, n 3, r {0.5, 2}"};
}

Measure est_s0() {
  const auto p = ParamSet::from_lambda(1.0, 2);
  const double v = oracle::bound_est_S0(p);
  const double want = pi / 2.0 * 1.5 * std::sqrt(3.0);
  const double order = std::max(0.0, specfun::conjectured_bound(FormTag::S, p) - v);
  return {rel(v, want) + order, fmt("est_S0 %.10g, expected %.10g", v, want)};
}

Measure est2() {
  const auto p = ParamSet::from_lambda(1.0, 2);
  const double v = oracle::bound_est2(p);
  const double want = pi / 2.0 * std::exp(0.5);
  const double order = std::max(0.0, specfun::conjectured_bound(FormTag::S, p) - v);
  return {rel(v, want) + order, fmt("est2 %.10g, expected %.10g", v, want)};
}

Measure b_bound() {
  double worst = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    const double x = i / 100.0;
    worst = std::max(worst, oracle::b_func(x) - std::numbers::e * (1.0 + x));
  }
  return {std::max(worst, 0.0), "max of b(x) - e(1+x) on [0, 10]"};
}

Measure kernel_w() {
  double worst = 0.0;
  for (int n : {2, 3, 6}) {
    for (double x : {0.05, 0.3, 0.9}) {
      auto f = [n](double y) { return std::pow(1.0 - y, n - 1) / y; };
      const double q = quad::value_or_throw(quad::integrate_finite(f, x, 1.0, {0.0, 1e-13}), "kernel_w");
      worst = std::max(worst, std::abs(forms::kernel_w(n, x) - q));
      worst = std::max(worst, std::abs(forms::kernel_w_binomial(n, x) - q));
    }
  }
  return {worst, "stable and expanded closed forms vs quadrature"};
}

Measure verq() {
  const auto p = ParamSet::from_alpha(1.0, 2);
  const auto q = MonotoneFn::piecewise_linear(FormTag::q, {1.0}, {2.0}, 2.0, RightRule::constant());
  const double c = forms::constraint_form3(q, p, 0.7);
  const double t = forms::target_form3(q, p);
  return {std::max(std::abs(c - 1.0), rel(t, 2.0 * pi)), fmt("constraint %.12g, target %.12g", c, t)};
}

Measure equiv_constraint() {
  double worst = 0.0;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto p = ParamSet::from_lambda(1.4, 3);
    const auto s = random_increasing_s(seed);
    const auto S = forms::transform(s, FormTag::S, p).fn;
    const auto h = forms::transform(s, FormTag::h, p).fn;
    const auto q = forms::transform(h, FormTag::q, p).fn;
    for (double t : {0.05, 1.0, 20.0}) {
      const double r1 = forms::constraint_ratio(S, p, t);
      const double r2 = forms::constraint_ratio(h, p, t * t);
      const double r3 = forms::constraint_ratio(q, p, t * t);
      worst = std::max({worst, rel(r2, r1), rel(r3, r1)});
    }
  }
  return {worst, "forms 1/2/3 ratios on three seeded s"};
}

Measure equiv_target() {
  double worst = 0.0;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto p = ParamSet::from_lambda(1.4, 3);
    const auto s = random_increasing_s(seed);
    const auto h = forms::transform(s, FormTag::h, p).fn;
    const auto q = forms::transform(h, FormTag::q, p).fn;
    const double t1 = forms::target_form1(forms::transform(s, FormTag::S, p).fn, p);
    const double t2 = forms::target_form2(h, p);
    const double t3 = forms::target_form3(q, p);
    worst = std::max({worst, rel(t1, (p.n() - 1) / p.lambda() * t2), rel(t3, 2.0 * p.alpha() * t2)});
  }
  return {worst, "target_1 = (n-1)/lambda target_2, target_3 = 2 alpha target_2"};
}

Measure lemma6() {
  const auto p = ParamSet::from_lambda(1.3, 3);
  const auto S = forms::transform(random_increasing_s(7), FormTag::S, p).fn;
  const auto back = forms::transform(forms::transform(S, FormTag::s, p).fn, FormTag::S, p).fn;
  double worst = 0.0;
  for (double t : S.nodes()) worst = std::max(worst, rel(back.eval(t), S.eval(t)));
  return {worst, "S -> s -> S at the nodes"};
}

Measure chain_coefficient() {
  double worst = 0.0;
  for (double lambda : {0.5, 1.0, 3.0}) {
    for (int n : {2, 5}) {
      const auto p = ParamSet::from_lambda(lambda, n);
      const auto h = forms::transform(oracle::extremal_S(p), FormTag::h, p).fn;
      worst = std::max(worst, rel(h.eval(1.0), 1.0 / specfun::beta(p.alpha(), n)));
    }
  }
  return {worst, "extremal S through the chain has coefficient 1/B(alpha, n)"};
}

Measure scale() {
  const auto p = ParamSet::from_lambda(1.4, 3);
  const auto h = forms::transform(random_increasing_s(4), FormTag::h, p).fn;
  double worst = 0.0;
  for (double c : {0.1, 3.0}) {
    const auto g = h.rescaled(c, std::pow(c, -p.alpha()));
    for (double t : {0.2, 5.0}) {
      worst = std::max(worst, rel(forms::constraint_ratio(g, p, t / c), forms::constraint_ratio(h, p, t)));
    }
  }
  return {worst, "ratio of c^-alpha h(c t) at t/c equals ratio of h at t"};
}

Measure lp_toy() {
  lp::LPProblem a;
  a.objective = {1.0};
  a.add_row({1.0}, 2.0);
  lp::LPProblem b;
  b.objective = {1.0, 1.0};
  b.add_row({1.0, -1.0}, 0.0);
  b.add_row({0.0, 1.0}, 5.0);
  const double x = lp::solve_lp(a).optimum;
  const double y = lp::solve_lp(b).optimum;
  return {std::max(std::abs(x - 2.0), std::abs(y - 10.0)), fmt("optima %.12g and %.12g", x, y)};
}

Measure lp_coarse() {
  const auto p = ParamSet::from_alpha(1.0, 2);
  extremal::DiscretizationSpec d;
  d.node_count = 20;
  d.t_min = 1e-2;
  d.t_max = 1e2;
  const auto model = extremal::build_lp(p, d);
  const auto sol = lp::solve_lp(model.problem);
  return {outside(sol.optimum, 0.9 * pi, 1.01 * pi), fmt("optimum %.10g, band [0.9, 1.01] pi = %.10g pi", sol.optimum, sol.optimum / pi)};
}

Measure pi_integral() {
  const double v = quad::value_or_throw(
      quad::integrate_halfline([](double t) { return 1.0 / (std::sqrt(t) * (1.0 + t)); }), "pi integral");
  return {rel(v, pi), fmt("%.15g vs %.15g", v, pi)};
}

Measure phi_integral() {
  const auto p = ParamSet::from_lambda(1.0, 2);
  const double v =
      quad::value_or_throw(quad::integrate_halfline([&](double t) { return kernelops::phi(p, t); }), "phi integral");
  return {std::abs(v - 0.5), fmt("%.15g", v, 0.0)};
}

Measure gamma() {
  double worst = 0.0;
  for (double x : {0.1, 0.5, 1.0, 1.5, 2.0, 3.7, 10.0, 57.3}) {
    worst = std::max(worst, std::abs(specfun::ln_gamma(x) - std::lgamma(x)) / std::max(1.0, std::abs(std::lgamma(x))));
  }
  return {worst, "ln_gamma vs std::lgamma"};
}

Measure beta_quad() {
  const double q = quad::value_or_throw(
      quad::integrate_finite([](double x) { return (1.0 - x) / std::sqrt(x); }, 0.0, 1.0), "beta integral");
  return {std::max(rel(specfun::beta(0.5, 2.0), 4.0 / 3.0), rel(q, 4.0 / 3.0)), "B(1/2, 2) = 4/3"};
}

std::vector<SelfTestCheck> make_registry() {
  return {
      {"gamma", "Lanczos ln Gamma against the C library", 1e-13, gamma},
      {"beta", "Beta function and its integral at (1/2, 2)", 1e-10, beta_quad},
      {"pi-integral", "int t^{-1/2}/(1+t) dt = pi", 1e-8, pi_integral},
      {"phi-integral", "int phi_1 = 1/2", 1e-10, phi_integral},
      {"with:B", "extremal S has constraint ratio 1", 1e-8, sharp_constraint},
      {"eq:Sl", "extremal S attains R1", 1e-6, sharp_target},
      {"R1:beta", "R1 product vs Beta form", 1e-12, r1_beta},
      {"R2:R3", "R2 vs R3 / (2 alpha)", 1e-12, r2_r3},
      {"in:sh21", "u^alpha / B(alpha, n) has constraint ratio 1", 1e-9, extremal_h_constraint},
      {"in:sh2i", "u^alpha / B(alpha, n) attains R2", 1e-8, extremal_h_target},
      {"Lkp3", "L^p I_k = 2^p k!/(k-p)! I_{k-p}", 1e-4, lkp3},
      {"Lkp4", "L^{k+1} I_k = 2^k k! f", 1e-4, lkp4},
      {"lem:2", "integration by parts moves L onto M", 1e-4, lemma2},
      {"M:pos", "M^q[phi] has nonnegative coefficients", 1e-12, m_positive},
      {"M:sym", "symbolic vs nested numeric M^2", 1e-5, m_symbolic},
      {"O:inf", "log-log slope of M[phi_1] at infinity", 0.05, slope_inf},
      {"O:0", "log-log slope of M[phi_1/2] at 0", 0.05, slope_zero},
      {"lem:5-0", "boundary product slope at 0", 0.1, lemma5_zero},
      {"lem:5-inf", "boundary product slope at infinity", 0.1, lemma5_inf},
      {"est:S", "a-priori constant vs grid minimum", 1e-6, est_s},
      {"est:an", "I_{n-2} form of the constraint is tight", 1e-8, est_an},
      {"est:S0", "majorant bound value and ordering", 1e-6, est_s0},
      {"conj:est2", "product bound value and ordering", 1e-6, est2},
      {"b:bound", "b(x) <= e(1+x)", 0.0, b_bound},
      {"kernel-w", "kernel W closed forms", 1e-10, kernel_w},
      {"verq:i", "form 3 at q = 2", 1e-9, verq},
      {"equiv:constraint", "constraint ratios agree across forms", 1e-6, equiv_constraint},
      {"equiv:target", "targets related by the exact factors", 1e-6, equiv_target},
      {"lem:6", "S -> s -> S round trip", 1e-9, lemma6},
      {"in:sh2", "chain image of the extremal S", 1e-9, chain_coefficient},
      {"scale", "rescaling invariance of form 2", 1e-8, scale},
      {"lp:toy", "simplex on two toy problems", 1e-12, lp_toy},
      {"lp:coarse", "coarse LP optimum near pi", 0.0, lp_coarse},
  };
}

}  // namespace

const std::vector<SelfTestCheck>& selftest_registry() {
  static const std::vector<SelfTestCheck> registry = make_registry();
  return registry;
}

std::vector<CheckResult> run_selftest(const Profile& profile, std::string_view only) {
  std::vector<CheckResult> out;
  for (const auto& check : selftest_registry()) {
    if (!only.empty() && check.anchor != only) continue;
    CheckResult r{check.anchor, check.description, 0.0, profile.tol(check.tol), false, ""};
    try {
      const Measure m = check.run();
      r.error = m.error;
      r.detail = m.detail;
      r.passed = std::isfinite(m.error) && m.error <= r.tol;
    } catch (const std::exception& e) {
      r.error = std::numeric_limits<double>::quiet_NaN();
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace ineqlab::cli
