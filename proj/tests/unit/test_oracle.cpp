#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "ineqlab/errors.hpp"
#include "ineqlab/oracle.hpp"
#include "ineqlab/specfun.hpp"

using namespace ineqlab;

TEST_SUITE("oracle") {
  TEST_CASE("a-priori constant is the grid minimum") {
    for (double lambda : {0.5, 1.0, 3.0}) {
      for (int n : {2, 4}) {
        const auto p = ParamSet::from_lambda(lambda, n);
        const auto b = oracle::lemma1_bound(p);
        double best = 1e300;
        for (int i = 1; i < 100000; ++i) {
          const double a = i / 100000.0;
          best = std::min(best, 2.0 * (n - 1) / (std::pow(a, lambda) * std::pow(1 - a * a, n - 1)));
        }
        CHECK(b.constant == doctest::Approx(best).epsilon(1e-7));
        CHECK(b.minimizer_a * b.minimizer_a == doctest::Approx(lambda / (lambda + 2.0 * (n - 1))));
      }
    }
    const auto z = oracle::lemma1_bound(ParamSet::from_lambda(0.0, 3));
    CHECK(z.constant == 4.0);
    CHECK(z.minimizer_a == 0.0);
  }

  TEST_CASE("b function") {
    CHECK(oracle::b_func(0.0) == 1.0);
    CHECK(oracle::b_func(1.0) == doctest::Approx(std::numbers::e));
    CHECK(oracle::b_func(2.0) == doctest::Approx(2 * std::numbers::e));
    CHECK_THROWS_AS(oracle::b_func(-1.0), DomainError);
  }

  TEST_CASE("bounds dominate the sharp constant") {
    for (double lambda : {0.5, 2.0, 5.0}) {
      for (int n : {2, 3, 7}) {
        const auto p = ParamSet::from_lambda(lambda, n);
        const double r1 = specfun::conjectured_bound(FormTag::S, p);
        CHECK(oracle::bound_est2(p) >= r1);
        CHECK(oracle::bound_est_S0(p) >= r1);
      }
    }
    CHECK_THROWS_AS(oracle::bound_est2(ParamSet::from_lambda(0.0, 2)), DomainError);
  }
}
