#pragma once

#include <vector>

#include "gkpack/types.hpp"

namespace gk {

// Feasibility condition of the classical theorem: all items fit the box
// side-wise and 2*a(items) <= w*h - (2*w_max - w)_+ * (2*h_max - h)_+ .
bool steinberg_condition(const std::vector<Item>& items, long long box_w, long long box_h);

// Slack of the condition: w*h - (2*w_max-w)_+ * (2*h_max-h)_+ - 2*a(items).
// Negative iff the area condition fails.
long long steinberg_slack(const std::vector<Item>& items, long long box_w, long long box_h);

// Packs every item into the box. Precondition: steinberg_condition holds
// (condition_error via std::invalid_argument reporting the slack otherwise).
// Internally a recursive divide-and-conquer over exact rational subregions;
// the result is compacted back onto the integer grid, so all emitted
// coordinates are integers.
Packing steinberg_pack(const std::vector<Item>& items, long long box_w, long long box_h);

// Corollary wrapper: packs items with max sides <= (1/2 + 2*eps_large)*N and
// a(items) <= (1/2 - (alpha+beta)*(1/2 + 2*eps_large) - 8*eps_large^2)*N^2
// into a box of size floor((1-alpha)*N) x floor((1-beta)*N).
Packing small_stein_pack(const std::vector<Item>& items, const Rational& alpha,
                         const Rational& beta, const Rational& eps_large, long long N);

// Greedy non-decreasing-area prefix with total area <= budget, maximal in the
// prefix order (ties by id).
std::vector<Item> area_prefix_select(const std::vector<Item>& items, long long budget);

// Pushes every placement left/down as far as possible without reordering the
// relative blocking structure. On input produced from integral items the
// fixpoint has integral coordinates. Exposed for reuse by other packers.
void compact_left_down(const Instance& inst, Packing& packing);

}  // namespace gk
