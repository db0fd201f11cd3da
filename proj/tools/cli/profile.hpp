#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace ineqlab::cli {

// Tolerance profile shared by selftest and check.
//   default  every check keeps its own tolerance
//   strict   tolerances tightened 10x
//   <number> every tolerance replaced by the number (e.g. 1e-15)
struct Profile {
  std::string name = "default";
  double scale = 1.0;
  std::optional<double> fixed;

  double tol(double base) const { return fixed ? *fixed : base * scale; }
};

// Throws ParseError for anything but default, strict or a positive number.
Profile parse_profile(std::string_view text);

// INEQLAB_PROFILE if set, else default.
Profile profile_from_env();

}  // namespace ineqlab::cli
