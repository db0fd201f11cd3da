#include <cmath>
#include <numbers>

#include "doctest.h"
#include "ineqlab/errors.hpp"
#include "ineqlab/specfun.hpp"

using namespace ineqlab;
using std::numbers::pi;

TEST_SUITE("specfun") {
  TEST_CASE("ln_gamma matches the C library and known values") {
    for (double x : {1e-3, 0.1, 0.5, 1.0, 2.5, 7.0, 33.3, 170.5}) {
      CHECK(specfun::ln_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
    }
    CHECK(specfun::ln_gamma(0.5) == doctest::Approx(0.5 * std::log(pi)).epsilon(1e-14));
    CHECK(specfun::ln_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK_THROWS_AS(specfun::ln_gamma(0.0), DomainError);
    CHECK_THROWS_AS(specfun::ln_gamma(-1.5), DomainError);
  }

  TEST_CASE("beta identities") {
    CHECK(specfun::beta(0.5, 0.5) == doctest::Approx(pi).epsilon(1e-13));
    CHECK(specfun::beta(1.0, 4.0) == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(specfun::beta(2.3, 0.7) == doctest::Approx(specfun::beta(0.7, 2.3)).epsilon(1e-14));
    // B(a, b) = B(a + 1, b) + B(a, b + 1)
    for (double a : {0.3, 1.7}) {
      for (double b : {0.9, 4.0}) {
        CHECK(specfun::beta(a, b) ==
              doctest::Approx(specfun::beta(a + 1, b) + specfun::beta(a, b + 1)).epsilon(1e-12));
      }
    }
    CHECK_THROWS_AS(specfun::beta(0.0, 1.0), DomainError);
  }

  TEST_CASE("product constant and the three bounds") {
    const auto p = ParamSet::from_lambda(1.0, 3);
    // (1 + 1/2)(1 + 1/4)
    CHECK(specfun::product_constant(p) == doctest::Approx(1.875).epsilon(1e-15));
    CHECK(specfun::sharp_coefficient(p) == doctest::Approx(2.0 * 2.0 * 1.875).epsilon(1e-15));
    CHECK(specfun::conjectured_bound(FormTag::S, p) == doctest::Approx(pi * 2.0 * 1.875 / 2.0).epsilon(1e-14));
    const double b = std::tgamma(0.5) * std::tgamma(3.0) / std::tgamma(3.5);
    CHECK(specfun::conjectured_bound(FormTag::h, p) == doctest::Approx(pi / b).epsilon(1e-13));
    CHECK(specfun::conjectured_bound(FormTag::q, p) == doctest::Approx(pi / b).epsilon(1e-13));
    CHECK_THROWS_AS(specfun::conjectured_bound(FormTag::s, p), UnsupportedFormError);
    CHECK_THROWS_AS(specfun::conjectured_bound(FormTag::S, ParamSet::from_lambda(0.0, 2)), DomainError);
  }

  TEST_CASE("form tags") {
    for (auto f : {FormTag::S, FormTag::s, FormTag::h, FormTag::q}) CHECK(form_from_string(to_string(f)) == f);
    CHECK_THROWS_AS(form_from_string("x"), ParseError);
  }

  TEST_CASE("parameter sets") {
    const auto p = ParamSet::from_alpha(0.75, 4);
    CHECK(p.lambda() == 1.5);
    CHECK(p.regime() == Regime::Conjectural);
    CHECK(ParamSet::from_lambda(0.0, 2).regime() == Regime::Degenerate);
    CHECK(ParamSet::from_lambda(0.4, 2).regime() == Regime::SubConjecture);
    CHECK(ParamSet::from_lambda(0.5, 2).regime() == Regime::Proved);
    CHECK(ParamSet::from_lambda(1.0, 2).regime() == Regime::Proved);
    CHECK_THROWS_AS(ParamSet::from_lambda(1.0, 1), DomainError);
    CHECK_THROWS_AS(ParamSet::from_lambda(-0.1, 2), DomainError);
    CHECK_THROWS_AS(ParamSet::from_lambda(NAN, 2), DomainError);
  }
}
