#include <cmath>

#include "doctest.h"
#include "ineqlab/errors.hpp"
#include "ineqlab/extremal.hpp"
#include "ineqlab/forms.hpp"
#include "ineqlab/oracle.hpp"
#include "ineqlab/specfun.hpp"

using namespace ineqlab;

namespace {

extremal::DiscretizationSpec small_disc(int m) {
  extremal::DiscretizationSpec d;
  d.node_count = m;
  d.t_min = 1e-2;
  d.t_max = 1e2;
  return d;
}

}  // namespace

TEST_SUITE("extremal") {
  TEST_CASE("spec defaults and validation") {
    const auto d = small_disc(10).resolved();
    CHECK(d.constraint_count == 120);
    CHECK(d.constraint_lo == doctest::Approx(1e-2));
    CHECK(d.constraint_hi == doctest::Approx(1e6));
    CHECK_THROWS_AS(small_disc(1).validate(), DomainError);
    auto bad = small_disc(10);
    bad.t_min = -1.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    CHECK(extremal::mode_from_string("sampled") == extremal::ConstraintMode::Sampled);
    CHECK_THROWS(extremal::mode_from_string("neither"));
  }

  TEST_CASE("LP assembly shape") {
    const auto p = ParamSet::from_alpha(1.5, 2);
    const auto lp = extremal::build_lp(p, small_disc(12));
    CHECK(lp.nodes.size() == 12);
    CHECK(lp.problem.cols() == 12);
    CHECK(lp.origin_row);
    CHECK(lp.tail_coeff == doctest::Approx(std::log1p(std::pow(1e2, -3.0)) / 3.0));
    // Increments back to nodal values are prefix sums.
    const auto h = lp.nodal_from_increments(std::vector<double>(12, 1.0));
    CHECK(h.back() == doctest::Approx(12.0));
  }

  TEST_CASE("LP weights reproduce the functionals") {
    const auto p = ParamSet::from_alpha(1.0, 3);
    const auto lp = extremal::build_lp(p, small_disc(8));
    std::vector<double> h(8);
    for (std::size_t j = 0; j < 8; ++j) h[j] = std::sqrt(lp.nodes[j]);
    const auto f = extremal::interpolant(lp, h);
    double target = 0.0;
    for (std::size_t j = 0; j < 8; ++j) target += lp.v[j] * h[j];
    CHECK(target == doctest::Approx(forms::target_form2(f, p)).epsilon(1e-8));
    for (std::size_t r = 0; r < lp.row_points.size(); r += 13) {
      double lhs = 0.0;
      for (std::size_t j = 0; j < 8; ++j) lhs += lp.w[r][j] * h[j];
      CHECK(lhs == doctest::Approx(forms::constraint_form2(f, p, lp.row_points[r])).epsilon(1e-8));
    }
  }

  TEST_CASE("tail majorant dominates") {
    const auto p = ParamSet::from_alpha(1.0, 3);
    const auto h = MonotoneFn::piecewise_linear(FormTag::h, {1.0, 2.0}, {1.0, 1.5}, 0.0, RightRule::constant());
    for (double t : {3.0, 10.0, 1e3}) {
      CHECK(extremal::tail_majorant(3, 1.5, 1.0, t) >= forms::constraint_form2(h, p, t) * (1 - 1e-12));
    }
  }

  TEST_CASE("certificate accepts a feasible and rejects an infeasible function") {
    const auto p = ParamSet::from_alpha(0.5, 2);
    const auto d = small_disc(20);
    const auto nodes = log_grid(1e-2, 1e2, 20);
    std::vector<double> v;
    const double c = 0.95 / specfun::beta(0.5, 2);
    for (double t : nodes) v.push_back(c * std::sqrt(t));
    const auto good = MonotoneFn::piecewise_linear(FormTag::h, nodes, v, 0.0, RightRule::constant());
    CHECK(extremal::certify(good, p, d).passed);
    const auto bad = good.scaled(1.2);
    const auto cert = extremal::certify(bad, p, d);
    CHECK_FALSE(cert.passed);
    CHECK(cert.worst_ratio > 1.0);
  }

  TEST_CASE("coarse search stays below the sharp bound in the proved regime") {
    const auto r = extremal::search(ParamSet::from_alpha(0.75, 2), small_disc(24));
    CHECK(r.status == lp::Status::Optimal);
    CHECK(r.certificate.passed);
    CHECK(r.ratio < 1.0);
    CHECK(r.ratio > 0.8);
    CHECK(r.verdict == extremal::SearchVerdict::Supports);
    CHECK(r.optimizer_nodes.size() == r.optimizer_values.size());
    CHECK(std::is_sorted(r.optimizer_values.begin(), r.optimizer_values.end()));
  }
}
