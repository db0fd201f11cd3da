#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "ineqlab/errors.hpp"
#include "ineqlab/extremal.hpp"
#include "ineqlab/forms.hpp"
#include "ineqlab/io.hpp"
#include "ineqlab/oracle.hpp"

using namespace ineqlab;

TEST_SUITE("io") {
  TEST_CASE("linear round trip") {
    const auto f = MonotoneFn::piecewise_linear(FormTag::S, {0.5, 1.0}, {0.2, 0.7}, 0.0, RightRule::power(1.5));
    const auto g = parse_monotone_fn(dump_monotone_fn(f));
    CHECK(g.form() == FormTag::S);
    for (double t : {0.1, 0.7, 3.0}) CHECK(g.eval(t) == doctest::Approx(f.eval(t)).epsilon(1e-15));
  }

  TEST_CASE("step round trip") {
    const auto f = MonotoneFn::step(FormTag::q, {1.0, 2.0}, {3.0, 1.0}, 2.0, RightRule::constant());
    const auto j = nlohmann::json::parse(dump_monotone_fn(f));
    CHECK(j.at("interpolation") == "step");
    CHECK(parse_monotone_fn(j.dump()).eval(1.5) == 3.0);
  }

  TEST_CASE("exact functions round trip through segments") {
    const auto p = ParamSet::from_alpha(0.7, 3);
    const auto h = oracle::extremal_h(p);
    const auto g = parse_monotone_fn(dump_monotone_fn(h));
    for (double t : {1e-4, 0.3, 50.0}) CHECK(g.eval(t) == doctest::Approx(h.eval(t)).epsilon(1e-14));
  }

  TEST_CASE("malformed input") {
    try {
      parse_monotone_fn("{\"form\": \"h\", ");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("byte") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_monotone_fn("[1, 2]"), ParseError);
    CHECK_THROWS_AS(parse_monotone_fn(R"({"form":"h","nodes":[1],"values":[1],"left":0})"), ParseError);
    CHECK_THROWS_AS(parse_monotone_fn(R"({"form":"x","nodes":[1],"values":[1],"left":0,"right":{"kind":"constant"}})"),
                    ParseError);
  }

  TEST_CASE("non-finite numbers become null") {
    const auto p = ParamSet::from_alpha(1.0, 2);
    forms::Verdict v{p, FormTag::h, {}, {}, {}};
    v.target_value = std::numeric_limits<double>::quiet_NaN();
    const nlohmann::json j = v;
    CHECK(j.at("target").is_null());
  }
}
