#include "samples.hpp"

#include <random>

namespace ineqlab::cli {

MonotoneFn random_increasing_s(std::uint64_t seed, int node_count) {
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> step(1.0);
  std::bernoulli_distribution flat(0.2);
  std::vector<double> nodes = log_grid(1e-2, 1e2, node_count);
  std::vector<double> values;
  double acc = 0.0;
  for (int i = 0; i < node_count; ++i) {
    const double inc = step(rng);
    if (i == 0 || !flat(rng)) acc += inc;
    values.push_back(acc);
  }
  return MonotoneFn::piecewise_linear(FormTag::s, std::move(nodes), std::move(values), 0.0,
                                      RightRule::constant());
}

}  // namespace ineqlab::cli
