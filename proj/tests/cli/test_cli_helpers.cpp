#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>

#include "ineqlab/errors.hpp"
#include "profile.hpp"
#include "samples.hpp"
#include "selftest.hpp"

using namespace ineqlab;

TEST_CASE("profiles") {
  CHECK(cli::parse_profile("default").tol(1e-6) == 1e-6);
  CHECK(cli::parse_profile("strict").tol(1e-6) == doctest::Approx(1e-7));
  CHECK(cli::parse_profile("1e-15").tol(1e-6) == 1e-15);
  CHECK_THROWS_AS(cli::parse_profile("loose"), ParseError);
  CHECK_THROWS_AS(cli::parse_profile("-1"), ParseError);
  ::setenv("INEQLAB_PROFILE", "strict", 1);
  CHECK(cli::profile_from_env().name == "strict");
  ::unsetenv("INEQLAB_PROFILE");
  CHECK(cli::profile_from_env().name == "default");
}

TEST_CASE("seeded samples are reproducible and increasing") {
  for (std::uint64_t seed : {1u, 5u, 99u}) {
    const auto a = cli::random_increasing_s(seed);
    const auto b = cli::random_increasing_s(seed);
    CHECK(a.values() == b.values());
    CHECK(a.is_nondecreasing());
    CHECK(a.left() == 0.0);
    CHECK(a.form() == FormTag::s);
  }
  CHECK(cli::random_increasing_s(1).values() != cli::random_increasing_s(2).values());
}

TEST_CASE("selftest registry") {
  const auto& reg = cli::selftest_registry();
  CHECK(reg.size() >= 25);
  const auto only = cli::run_selftest(cli::Profile{}, "Lkp4");
  REQUIRE(only.size() == 1);
  CHECK(only[0].passed);
  // An absurdly tight fixed tolerance must fail at least one numeric check.
  cli::Profile tight{"tight", 1.0, 1e-300};
  const auto all = cli::run_selftest(tight, "pi-integral");
  CHECK_FALSE(all[0].passed);
}
