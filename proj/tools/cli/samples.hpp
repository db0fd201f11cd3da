#pragma once

#include <cstdint>

#include "ineqlab/monotone_fn.hpp"

namespace ineqlab::cli {

// Seeded piecewise-linear increasing s with s(0) = 0 and a constant tail:
// node_count log-spaced nodes on [1e-2, 1e2], exponential increments with
// roughly one in five set to zero so that flat stretches occur.
MonotoneFn random_increasing_s(std::uint64_t seed, int node_count = 12);

}  // namespace ineqlab::cli
