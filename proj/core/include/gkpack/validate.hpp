#pragma once

#include <string>
#include <vector>

#include "gkpack/types.hpp"

namespace gk {

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;

  void fail(std::string msg) {
    ok = false;
    violations.push_back(std::move(msg));
  }
};

// Checks that every placement references a known item, no item is placed
// twice, rotation is only used when the instance allows it, every placed
// rectangle lies inside the region, and placed rectangles are pairwise
// interior-disjoint. Total: never throws on well-formed inputs.
ValidationReport validate_packing(const Instance& inst, const Packing& packing);

}  // namespace gk
