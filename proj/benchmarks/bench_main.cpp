#include <benchmark/benchmark.h>

#include <cmath>

#include "ineqlab/extremal.hpp"
#include "ineqlab/forms.hpp"
#include "ineqlab/lp.hpp"
#include "ineqlab/oracle.hpp"
#include "ineqlab/quad.hpp"
#include "ineqlab/specfun.hpp"

using namespace ineqlab;

static void BM_LnGamma(benchmark::State& state) {
  double x = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::ln_gamma(x));
    x = x < 100.0 ? x * 1.01 : 0.37;
  }
}
BENCHMARK(BM_LnGamma);

static void BM_QuadHalfline(benchmark::State& state) {
  for (auto _ : state) {
    auto r = quad::integrate_halfline([](double t) { return 1.0 / (std::sqrt(t) * (1.0 + t)); });
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_QuadHalfline);

static void BM_ConstraintForm2(benchmark::State& state) {
  const auto p = ParamSet::from_alpha(1.0, 3);
  const auto nodes = log_grid(1e-3, 1e3, 64);
  std::vector<double> v;
  for (double t : nodes) v.push_back(std::sqrt(t));
  const auto h = MonotoneFn::piecewise_linear(FormTag::h, nodes, v, 0.0, RightRule::constant());
  for (auto _ : state) benchmark::DoNotOptimize(forms::constraint_form2(h, p, 2.0));
}
BENCHMARK(BM_ConstraintForm2);

static void BM_BuildLP(benchmark::State& state) {
  const auto p = ParamSet::from_alpha(1.0, 2);
  extremal::DiscretizationSpec d;
  d.node_count = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(extremal::build_lp(p, d).problem.num_rows());
}
BENCHMARK(BM_BuildLP)->Arg(40)->Arg(160)->Unit(benchmark::kMillisecond);

static void BM_SolveLP(benchmark::State& state) {
  const auto p = ParamSet::from_alpha(1.0, 2);
  extremal::DiscretizationSpec d;
  d.node_count = static_cast<int>(state.range(0));
  const auto model = extremal::build_lp(p, d);
  for (auto _ : state) benchmark::DoNotOptimize(lp::solve_lp(model.problem).optimum);
}
BENCHMARK(BM_SolveLP)->Arg(40)->Arg(160)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
