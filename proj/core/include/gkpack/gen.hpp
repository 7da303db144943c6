#pragma once

#include <cstdint>
#include <string>

#include "gkpack/types.hpp"

namespace gk {

enum class GenProfile {
  Uniform,     // sides uniform in [1, N]
  LongHeavy,   // every item gets one side > N/2
  SmallOnly,   // sides at most N/4
  MixedSkewed, // fixed shares of long / short / skewed-thin items
};

GenProfile parse_profile(const std::string& name);

// Deterministic random instance: same (n, N, seed, profile, rotations) always
// yields the same items. Profits are uniform in [1, 100].
Instance generate_instance(int n, long long N, uint64_t seed, GenProfile profile,
                           bool rotations = false);

}  // namespace gk
