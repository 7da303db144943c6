#include "gkpack/gen.hpp"

#include <random>
#include <stdexcept>

namespace gk {

GenProfile parse_profile(const std::string& name) {
  if (name == "uniform") return GenProfile::Uniform;
  if (name == "long-heavy") return GenProfile::LongHeavy;
  if (name == "small-only") return GenProfile::SmallOnly;
  if (name == "mixed-skewed") return GenProfile::MixedSkewed;
  throw std::invalid_argument("unknown profile: " + name);
}

Instance generate_instance(int n, long long N, uint64_t seed, GenProfile profile,
                           bool rotations) {
  if (n < 0 || N < 1) throw std::invalid_argument("generate_instance: need n >= 0, N >= 1");
  Instance inst;
  inst.N = N;
  inst.rotations = rotations;
  std::mt19937_64 rng(seed);
  auto uni = [&](long long lo, long long hi) {
    if (hi < lo) hi = lo;
    return lo + static_cast<long long>(rng() % static_cast<uint64_t>(hi - lo + 1));
  };

  for (int i = 0; i < n; ++i) {
    Item it;
    it.id = i + 1;
    it.p = uni(1, 100);
    switch (profile) {
      case GenProfile::Uniform:
        it.w = uni(1, N);
        it.h = uni(1, N);
        break;
      case GenProfile::LongHeavy: {
        const long long lo = N / 2 + 1;
        if (rng() % 2 == 0) {
          it.w = uni(lo, N);
          it.h = uni(1, N);
        } else {
          it.w = uni(1, N);
          it.h = uni(lo, N);
        }
        break;
      }
      case GenProfile::SmallOnly:
        it.w = uni(1, std::max<long long>(1, N / 4));
        it.h = uni(1, std::max<long long>(1, N / 4));
        break;
      case GenProfile::MixedSkewed: {
        // Fixed shares by index: 1/4 long, 1/4 thin-skewed, 1/2 small.
        const int c = i % 4;
        if (c == 0) {
          it.w = uni(N / 2 + 1, N);
          it.h = uni(1, N / 2 > 0 ? N / 2 : 1);
        } else if (c == 1) {
          it.w = uni(1, std::max<long long>(1, N / 8));
          it.h = uni(N / 2 + 1, N);
        } else {
          it.w = uni(1, std::max<long long>(1, N / 3));
          it.h = uni(1, std::max<long long>(1, N / 3));
        }
        break;
      }
    }
    inst.items.push_back(it);
  }
  return inst;
}

}  // namespace gk
