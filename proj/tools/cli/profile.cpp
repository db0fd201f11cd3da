#include "profile.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

#include "ineqlab/errors.hpp"

namespace ineqlab::cli {

Profile parse_profile(std::string_view text) {
  if (text == "default" || text.empty()) return {};
  if (text == "strict") return {"strict", 0.1, std::nullopt};
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !(value > 0.0) || !std::isfinite(value)) {
    throw ParseError("unknown tolerance profile '" + std::string(text) +
                     "' (expected default, strict or a positive number)");
  }
  return {std::string(text), 1.0, value};
}

Profile profile_from_env() {
  const char* env = std::getenv("INEQLAB_PROFILE");
  return env ? parse_profile(env) : Profile{};
}

}  // namespace ineqlab::cli
