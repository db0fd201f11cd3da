#include <cmath>

#include "doctest.h"
#include "ineqlab/errors.hpp"
#include "ineqlab/monotone_fn.hpp"

using namespace ineqlab;

TEST_SUITE("monotone_fn") {
  TEST_CASE("piecewise linear evaluation and tails") {
    const auto f = MonotoneFn::piecewise_linear(FormTag::h, {1.0, 2.0}, {1.0, 3.0}, 0.0, RightRule::constant());
    CHECK(f.eval(0.5) == doctest::Approx(0.5));
    CHECK(f.eval(1.5) == doctest::Approx(2.0));
    CHECK(f.eval(10.0) == doctest::Approx(3.0));
    CHECK(f.is_nondecreasing());
    const auto g = MonotoneFn::piecewise_linear(FormTag::h, {1.0, 2.0}, {1.0, 3.0}, 0.0, RightRule::power(0.5));
    CHECK(g.eval(8.0) == doctest::Approx(6.0));
    CHECK(g.right().kind == RightRule::Kind::Power);
  }

  TEST_CASE("step data") {
    const auto q = MonotoneFn::step(FormTag::q, {1.0, 2.0}, {3.0, 1.0}, 2.0, RightRule::constant());
    CHECK(q.eval(0.5) == 2.0);
    CHECK(q.eval(1.5) == 3.0);
    CHECK(q.eval(5.0) == 1.0);
  }

  TEST_CASE("invalid data is rejected") {
    CHECK_THROWS_AS(MonotoneFn::piecewise_linear(FormTag::h, {2.0, 1.0}, {1.0, 2.0}, 0.0, RightRule::constant()),
                    DomainError);
    CHECK_THROWS_AS(MonotoneFn::piecewise_linear(FormTag::h, {1.0, 2.0}, {1.0}, 0.0, RightRule::constant()),
                    DomainError);
    CHECK_THROWS_AS(MonotoneFn::piecewise_linear(FormTag::h, {-1.0, 2.0}, {1.0, 2.0}, 0.0, RightRule::constant()),
                    DomainError);
  }

  TEST_CASE("monotonicity and log-convexity") {
    CHECK_THROWS_AS(MonotoneFn::piecewise_linear(FormTag::h, {1.0, 2.0}, {2.0, 1.0}, 0.0, RightRule::constant()),
                    DomainError);
    const auto expo = MonotoneFn::piecewise_linear(FormTag::S, {1.0, 2.0, 4.0}, {1.0, 2.0, 4.0}, 0.0,
                                                   RightRule::power(1.0));
    CHECK(expo.is_log_convex_on_nodes());
    const auto concave = MonotoneFn::piecewise_linear(FormTag::S, {1.0, 2.0, 4.0}, {1.0, 3.0, 4.0}, 0.0,
                                                      RightRule::constant());
    CHECK_FALSE(concave.is_log_convex_on_nodes());
  }

  TEST_CASE("power law and rescaling") {
    const auto f = MonotoneFn::power_law(FormTag::h, 2.0, 1.5, log_grid(0.1, 10.0, 5));
    CHECK(f.eval(4.0) == doctest::Approx(16.0).epsilon(1e-14));
    const auto g = f.rescaled(3.0, 0.5);
    CHECK(g.eval(2.0) == doctest::Approx(0.5 * f.eval(6.0)).epsilon(1e-14));
    CHECK(std::isinf(f.first_piece_end()));
  }

  TEST_CASE("piece algebra") {
    const PieceExpr e({{2.0, 3.0}, {1.0, 0.5}});
    CHECK(e.derivative(2.0) == doctest::Approx(6.0 * 4.0 + 0.5 / std::sqrt(2.0)));
    CHECK(e.antiderivative().derivative(1.7) == doctest::Approx(e.eval(1.7)));
    CHECK(e.antiderivative_over_x().derivative(1.7) == doctest::Approx(e.eval(1.7) / 1.7));
    CHECK(e.sqrt_substituted().eval(4.0) == doctest::Approx(e.eval(2.0)));
    CHECK(e.square_substituted().eval(2.0) == doctest::Approx(e.eval(4.0)));
    CHECK(e.x_derivative().eval(1.3) == doctest::Approx(1.3 * e.derivative(1.3)));
    const PieceExpr lg({}, 1.0);
    CHECK_THROWS_AS(lg.antiderivative(), TransformError);
  }

  TEST_CASE("log grid") {
    const auto g = log_grid(1e-2, 1e2, 5);
    REQUIRE(g.size() == 5);
    CHECK(g.front() == doctest::Approx(1e-2));
    CHECK(g[2] == doctest::Approx(1.0));
    CHECK(g.back() == doctest::Approx(1e2));
  }
}
