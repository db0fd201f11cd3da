#include <cmath>

#include "doctest.h"
#include "ineqlab/errors.hpp"
#include "ineqlab/kernelops.hpp"

using namespace ineqlab;

TEST_SUITE("kernelops") {
  TEST_CASE("phi values") {
    const auto p = ParamSet::from_lambda(1.0, 2);
    CHECK(kernelops::phi(p, 1.0) == doctest::Approx(0.25));
    CHECK(kernelops::phi(p, 2.0) == doctest::Approx(2.0 / 25.0));
    CHECK(kernelops::phi_as_kclass(p).eval(2.0) == doctest::Approx(2.0 / 25.0).epsilon(1e-15));
    CHECK_THROWS_AS(kernelops::phi_as_kclass(ParamSet::from_lambda(1.5, 2)), RegimeError);
    CHECK_THROWS_AS(kernelops::phi(p, -1.0), DomainError);
  }

  TEST_CASE("one M step agrees with a hand derivative") {
    // g = 1/(t^a (1+t^b)^k), M[g] = -(g/t)'
    const KClassExpr e(0.8, {{1.3, -0.5, 2.0, 0.8}});
    const auto m = e.m_step();
    for (double t : {0.3, 1.0, 4.0}) {
      const double h = 1e-5 * t;
      auto g_over_t = [&](double x) { return e.eval(x) / x; };
      const double fd = -(g_over_t(t + h) - g_over_t(t - h)) / (2 * h);
      CHECK(m.eval(t) == doctest::Approx(fd).epsilon(1e-8));
    }
  }

  TEST_CASE("M powers of phi stay nonnegative") {
    for (double lambda : {0.2, 0.6, 1.0}) {
      const auto p = ParamSet::from_lambda(lambda, 2);
      for (int q = 0; q <= 5; ++q) CHECK(kernelops::m_power_phi(p, q).min_coeff() >= 0.0);
    }
  }

  TEST_CASE("I_k of a constant") {
    // int_0^r (r^2 - t^2)^k t dt = r^{2k+2} / (2 (k + 1))
    for (int k : {0, 1, 3}) {
      const double r = 1.3;
      CHECK(kernelops::i_k([](double) { return 1.0; }, k, r) ==
            doctest::Approx(std::pow(r, 2 * k + 2) / (2.0 * (k + 1))).epsilon(1e-12));
    }
    CHECK_THROWS_AS(kernelops::i_k([](double) { return 1.0; }, -1, 1.0), DomainError);
  }

  TEST_CASE("numeric L and M on powers") {
    auto f = [](double r) { return std::pow(r, 4); };
    CHECK(kernelops::l_apply_numeric(f, 1, 0.9).value == doctest::Approx(4 * 0.81).epsilon(1e-9));
    CHECK(kernelops::l_apply_numeric(f, 2, 0.9).value == doctest::Approx(8.0).epsilon(1e-7));
    // M[t^3] = -(t^2)' = -2t
    CHECK(kernelops::m_apply_numeric([](double t) { return t * t * t; }, 1, 1.7).value ==
          doctest::Approx(-3.4).epsilon(1e-9));
  }

  TEST_CASE("log-log slope") {
    CHECK(kernelops::loglog_slope([](double t) { return 3 * std::pow(t, -2.5); }, 10.0, 100.0) ==
          doctest::Approx(-2.5).epsilon(1e-12));
    CHECK_THROWS_AS(kernelops::loglog_slope([](double) { return -1.0; }, 1.0, 2.0), DomainError);
  }
}
