#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "gkpack/types.hpp"

namespace gk {

// Boundary L region ([0,N] x [0,h_l]) union ([0,w_l] x [0,N]). Wide items
// (w > N/2) stack in the bottom arm, tall items (h > N/2) in the left arm.
struct LShape {
  long long N = 1;
  long long w_l = 0;  // width of the vertical arm
  long long h_l = 0;  // height of the horizontal arm
};

struct LInstance {
  LShape shape;
  std::vector<Item> hor;  // every item has w > N/2
  std::vector<Item> ver;  // every item has h > N/2
  void check() const;
};

struct RestrictedSets {
  int r_level = 1;
  std::vector<Rational> T;  // candidate top coordinates, sorted, contains 0
  std::vector<Rational> R;  // candidate right coordinates, sorted, contains 0
};

struct ShiftResult {
  std::set<int> deleted;             // item ids removed by the procedure
  std::map<int, Rational> shift;     // kept item id -> new top coordinate
};

struct LPackResult {
  long long profit = 0;
  Packing packing;
};

// Normal form: wide items sorted by non-increasing width bottom-to-top,
// stacked contiguously from y=0 and right-aligned at x=N; tall items sorted by
// non-increasing height left-to-right, stacked from x=0 and top-aligned at
// y=N. Returns the packing iff the stacks fit their arms and no wide/tall
// pair overlaps; nullopt otherwise. Feasibility of a subset pair is fully
// determined by this normal form.
std::optional<Packing> normalize_l_packing(const std::vector<Item>& selected_hor,
                                           const std::vector<Item>& selected_ver,
                                           const LShape& shape);

// Exact DP over candidate top coordinates T and right coordinates R (both
// sorted, containing 0). With T = R = {0..N} this is the pseudo-polynomial
// exact optimum.
LPackResult lpack_exact_dp(const LInstance& inst, const std::vector<Rational>& T,
                           const std::vector<Rational>& R);

// Exhaustive subset-pair enumeration against normalize_l_packing.
LPackResult lpack_oracle(const LInstance& inst, int item_cap = 16);

// G = {g_1 = 0, then each next smallest index with h >= h(previous g)}.
std::vector<size_t> growing_subsequence(const std::vector<Rational>& heights);

// The delete-and-shift procedure on a stack of items given bottom-to-top in
// non-increasing width order, stacked contiguously from 0 (normal form).
// n_total is the number of items of the full instance side the stack belongs
// to (defaults to the stack size); it fixes the rounding grain h(g)/(2n).
ShiftResult delete_and_shift(const std::vector<Item>& stack_bottom_up, int r,
                             const Rational& eps, int n_total = -1);

// Candidate coordinate sets for rounds r = 1..ceil(1/eps), deduplicated,
// sorted, clipped to [0, N].
std::vector<RestrictedSets> build_restricted_sets(const LInstance& inst, const Rational& eps,
                                                  size_t size_cap = 2'000'000);

// Runs the DP for every (r_hor, r_ver) level pair and keeps the best.
LPackResult lpack_ptas(const LInstance& inst, const Rational& eps);

}  // namespace gk
