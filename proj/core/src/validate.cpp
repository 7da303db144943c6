#include "gkpack/validate.hpp"

#include <algorithm>
#include <map>

namespace gk {

void Packing::canonicalize() {
  std::sort(placements.begin(), placements.end(),
            [](const Placement& a, const Placement& b) { return a.item_id < b.item_id; });
}

ValidationReport validate_packing(const Instance& inst, const Packing& packing) {
  ValidationReport rep;

  std::map<int, const Item*> by_id;
  for (const auto& it : inst.items) by_id[it.id] = &it;

  std::vector<std::pair<int, RectI>> placed;
  std::map<int, int> seen;
  for (const auto& pl : packing.placements) {
    auto found = by_id.find(pl.item_id);
    if (found == by_id.end()) {
      rep.fail("unknown item id " + std::to_string(pl.item_id));
      continue;
    }
    if (++seen[pl.item_id] > 1) {
      rep.fail("item " + std::to_string(pl.item_id) + " placed more than once");
      continue;
    }
    if (pl.rotated && !inst.rotations) {
      rep.fail("item " + std::to_string(pl.item_id) + " rotated but rotations are disabled");
    }
    RectI r = footprint(*found->second, pl);
    if (!contains(packing.region, r)) {
      rep.fail("item " + std::to_string(pl.item_id) + " at (" + std::to_string(r.x) + "," +
               std::to_string(r.y) + ") size " + std::to_string(r.w) + "x" +
               std::to_string(r.h) + " leaves the region");
    }
    placed.emplace_back(pl.item_id, r);
  }

  for (size_t i = 0; i < placed.size(); ++i)
    for (size_t j = i + 1; j < placed.size(); ++j)
      if (interiors_overlap(placed[i].second, placed[j].second))
        rep.fail("items " + std::to_string(placed[i].first) + " and " +
                 std::to_string(placed[j].first) + " overlap");

  return rep;
}

}  // namespace gk
