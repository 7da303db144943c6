#pragma once

#include <vector>

#include "gkpack/types.hpp"

namespace gk {

struct NfdhResult {
  Packing packing;               // region anchored at (0,0), size box_w x box_h
  std::vector<Item> leftover;    // unpacked suffix, in shelf order
};

// Next-Fit-Decreasing-Height. Items are sorted by non-increasing height
// (ties: descending width, then id) and placed on shelves left to right; a new
// shelf opens on the first item that does not fit the current one. Once the
// next shelf does not fit vertically, all remaining items are leftover.
//
// Guarantee: if every item satisfies w <= eps*box_w and h <= eps*box_h, the
// packed area is at least min(a(items), (1-2*eps)*box_w*box_h); in particular
// leftover is empty whenever a(items) <= (1-2*eps)*box_w*box_h.
NfdhResult nfdh_pack(const std::vector<Item>& items, long long box_w, long long box_h);

}  // namespace gk
