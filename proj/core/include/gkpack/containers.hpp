#pragma once

#include <string>
#include <vector>

#include "gkpack/types.hpp"

namespace gk {

// A container is a labelled box: horizontal containers stack their items one
// on top of the other, vertical containers place them side by side, and area
// containers hold only items that are small relative to the container and are
// realized with the shelf packer.
enum class ContainerKind { Horizontal, Vertical, Area };

struct Container {
  ContainerKind kind = ContainerKind::Horizontal;
  RectI rect;
};

struct ContainerLayout {
  std::vector<Container> containers;
};

// Containers must be pairwise interior-disjoint and inside the region.
void check_layout(const ContainerLayout& layout, const RectI& region);

// JSON list of {"kind": "h"|"v"|"a", "x", "y", "w", "h"}.
ContainerLayout parse_layout(const std::string& text);
std::string serialize_layout(const ContainerLayout& layout);

// Candidate container side lengths: P^(k) applied to the item widths and
// heights, where P^(k) = { p_1 + ... + p_l + i * p_{l+1} : p_j in P, l <= k,
// 0 <= i <= n }. Deduplicated and sorted; |P^(k)| = O(n^(k+2)).
struct CandidateSizes {
  std::vector<long long> widths, heights;
};
CandidateSizes candidate_sizes(const std::vector<Item>& items, int k, size_t cap = 2'000'000);

// Packs a profitable subset of the instance's items into the given containers
// by reduction to generalized assignment (one bin per container), then
// realizes each bin according to its kind. Profit is within (1 - O(eps)) of
// the best container packing for this layout.
struct ContainerPackResult {
  long long profit = 0;
  Packing packing;
  std::vector<int> container_of;  // parallel to inst.items; -1 if unpacked
};
ContainerPackResult pack_into_containers(const Instance& inst, const ContainerLayout& layout,
                                         const Rational& eps);

// Replaces one horizontal/vertical container by at most
// ceil(log_{1+eps}(1/delta))/eps^2 smaller containers of the same kind packed
// inside it, keeping a subset of the items with profit >= (1-3*eps) of the
// original and total container area <= a(packed_items). delta <= 0 selects
// the default min item extent / container extent. Requires eps in (0, 1/3].
struct ShrinkResult {
  std::vector<Container> containers;        // placed inside the original
  std::vector<std::vector<Item>> assigned;  // items per new container
  long long kept_profit = 0;
};
ShrinkResult shrink_container(const Container& c, const std::vector<Item>& packed_items,
                              const Rational& eps, const Rational& delta = -1);

// Rounds a horizontal/vertical container down so that both sides belong to
// the candidate size sets (k >= 1/eps), keeping profit >= (1-eps): if more
// than 1/eps items, the least profitable of the ceil(1/eps) tallest is
// dropped and the height snaps to a candidate sum.
struct RoundResult {
  Container container;
  std::vector<Item> kept;
};
RoundResult round_container(const Container& c, const std::vector<Item>& items,
                            const Rational& eps, long long k);

// Rounds an area container (items must be eps-small for it) down to integer
// multiples of the maximum item width/height, then greedily keeps items by
// profit/area ratio up to a (1-2*eps) fraction of the area: profit >=
// (1-3*eps), every kept item is eps/(1-eps)-small for the result.
RoundResult round_area_container(const Container& c, const std::vector<Item>& items,
                                 const Rational& eps);

// Greedy integral assignment of same-width slices to containers: fills each
// container with matching-width slices; on the first overflow the slice is
// discarded and the container closed. At most one discard per container.
struct FillResult {
  std::vector<int> assignment;  // slice index -> container index or -1
  std::vector<int> discarded;   // slice indices dropped at container closure
  std::vector<int> unplaced;    // slices with no matching open container left
};
FillResult greedy_integral_fill(const std::vector<Container>& family,
                                const std::vector<Item>& slices);

}  // namespace gk
