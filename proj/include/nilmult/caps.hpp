#pragma once

#include "nilmult/common.hpp"

#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>

namespace nilmult {

/// Resource caps for the exponential parts of the engine.
///
/// Overridable at runtime through NILMULT_CAPS, a comma separated list of
/// key=value pairs, e.g. `NILMULT_CAPS=special_rank=256,closure=5000`.
struct Caps {
  std::size_t closure = 2000;           // permutation closure size
  std::size_t min_generators = 512;     // largest |G| for d(G) search
  std::size_t special_rank = 128;       // largest |G| for subgroup enumeration
  std::size_t basis = 1'000'000;        // Hall basis elements
  unsigned nilpotent_rank = 4;          // free nilpotent group: letters
  unsigned nilpotent_class = 5;         // free nilpotent group: class

  static Caps from_string(std::string_view spec) {
    Caps caps;
    std::string text(spec);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      auto eq = item.find('=');
      if (eq == std::string::npos) throw InvalidArgument("NILMULT_CAPS: expected key=value, got '" + item + "'");
      std::string key = item.substr(0, eq);
      std::string raw = item.substr(eq + 1);
      std::size_t value = 0;
      try {
        std::size_t used = 0;
        value = std::stoull(raw, &used);
        if (used != raw.size()) throw std::invalid_argument(raw);
      } catch (const std::exception&) {
        throw InvalidArgument("NILMULT_CAPS: bad value for '" + key + "': '" + raw + "'");
      }
      if (key == "closure") caps.closure = value;
      else if (key == "min_generators") caps.min_generators = value;
      else if (key == "special_rank") caps.special_rank = value;
      else if (key == "basis") caps.basis = value;
      else if (key == "nilpotent_rank") caps.nilpotent_rank = static_cast<unsigned>(value);
      else if (key == "nilpotent_class") caps.nilpotent_class = static_cast<unsigned>(value);
      else throw InvalidArgument("NILMULT_CAPS: unknown key '" + key + "'");
    }
    return caps;
  }

  static Caps from_env() {
    const char* env = std::getenv("NILMULT_CAPS");
    return env ? from_string(env) : Caps{};
  }
};

}  // namespace nilmult
