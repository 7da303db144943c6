#pragma once

#include <vector>

#include "gkpack/lpack.hpp"
#include "gkpack/types.hpp"

namespace gk {

// Long items (one side > N/2) pushed flush against the four knapsack sides:
// wide items (footprint width > N/2) in the top/bottom stacks, tall items in
// the left/right stacks. Each stack is ordered outward-in (first element
// touches the knapsack side) and forms a contiguous chain.
struct RingPacking {
  long long N = 1;
  std::vector<Placement> left, right, top, bottom;
};

// Pushes every long item to a boundary stack: a wide item with a tall item
// above it (overlapping in x) moves down, one with a tall item below moves up,
// unconstrained ones move down; symmetrically tall items move left or right.
// The shifts preserve the relative order along each axis, so each side ends up
// with a contiguous stack. Input must validate and every item must have a
// footprint side > N/2.
RingPacking ring_shift(const Instance& inst, const Packing& packing);

long long ring_profit(const Instance& inst, const RingPacking& ring);

struct RingToLResult {
  Packing packing;      // boundary-L packing of the kept items, normal form
  LShape shape;         // the L it lives in
  long long kept_profit = 0;
};

// Removes the least profitable stack (ties prefer top, then right, then
// bottom, then left) and repacks the remaining three stacks into a boundary L
// by iteratively peeling lonely boundary items across guillotine cuts; the
// rightmost case shifts the survivors sideways and reinserts the item on the
// opposite side. Kept profit >= 3/4 of the ring profit.
RingToLResult ring_to_boundary_l(const Instance& inst, const RingPacking& ring);

}  // namespace gk
