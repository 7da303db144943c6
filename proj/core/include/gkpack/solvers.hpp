#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkpack/containers.hpp"
#include "gkpack/lpack.hpp"
#include "gkpack/types.hpp"

namespace gk {

// One candidate decomposition of the knapsack: items with a side longer than
// ell go into the boundary L, the rest into the containers of the layout.
struct LCCandidate {
  long long ell = 0;        // long-item threshold, > N/2 (N means degenerate L)
  LShape l_shape;           // boundary L (arms of width 0 when degenerate)
  ContainerLayout layout;   // containers in the region outside the L
};

struct SolveReport {
  Packing best;
  long long best_profit = 0;
  std::map<std::string, long long> candidate_profits;
  std::optional<long long> oracle_profit;
  double ratio = 0.0;  // best / oracle when the oracle ran, else 0
};

struct OracleResult {
  long long profit = 0;
  Packing packing;
};

// Exact optimum by subset enumeration plus backtracking placement. Optimal
// packings can be normalized so that every coordinate is a subset sum of item
// extents, so the search runs over those grids only. Honors rotations.
OracleResult brute_force_oracle(const Instance& inst, int item_cap = 8);

// Best of several constructive candidate families:
//  (a) L-packing of all items with a side > N/2 in the full knapsack;
//  (b,c) container packings in the two reduced knapsacks N x N/(1+eps) and
//        its transpose, over a generated family of layouts;
//  (d) boundary-L packing of the long items plus a greedy area prefix of the
//      short items packed in the complementary box;
//  plus the best single item. Requires 0 < eps <= 1/13.
SolveReport solve_cardinality(const Instance& inst, const Rational& eps);

// Weighted variant: iterates the long-item threshold ell over all item side
// lengths > N/2 plus the degenerate L; long items go into a boundary L of arm
// width eps^2*N, short items into generated container layouts in the
// complementary box (area containers absorb the small items). Requires
// 0 < eps <= 1/13.
SolveReport solve_weighted(const Instance& inst, const Rational& eps);

// Rotation-aware variant: container packing of the full knapsack, a
// contraction-based candidate that frees a vertical strip for leftover thin
// items, and the massive-item split when a massive item exists.
SolveReport solve_rotations(const Instance& inst, const Rational& eps);

// Repacks at least half the profit of a valid packing without massive items
// (both sides >= (1-eps)N) into a bin of width N - ceil(eps*N/2) and height
// N, using rotations. Implements a four-strip case analysis: either the
// top/bottom strips are decoupled (stack the side strips transposed on top),
// or a bottom-to-top crossing item splits the packing into left/right halves
// that are each contracted separately.
struct ContractionResult {
  Packing packing;
  long long kept_profit = 0;
  size_t kept_items = 0;
  std::string case_name;
};
ContractionResult resource_contraction_weighted(const Instance& inst, const Packing& m,
                                                const Rational& eps);

// Cardinality variant: keeps at least (2/3)(1-10*eps_s) of the items of the
// filtered packing (eps_s is the chosen height-band parameter) in a bin of
// width N - ceil(eps^(K+1)*N), K = ceil(1/(2*eps)). Pipeline: drop items
// large on both sides, drop the cheapest height band, orient so the
// horizontal strips carry at most half the area, then either rotate the
// crossing columns into freed vertical strips (Case A) or take the better of
// dropping one strip side and a Steinberg repack (Case B). Requires
// eps <= 1/13 and eps_small < eps^(K+1); test_mode relaxes the cardinality
// precondition |M| >= 1/eps_small^3.
struct CardinalityContractionResult {
  Packing packing;
  size_t kept_items = 0;
  size_t m3_items = 0;     // size of the filtered set the bound refers to
  Rational eps_s = 0;      // chosen band parameter
  std::string case_name;
};
CardinalityContractionResult resource_contraction_cardinality(
    const Instance& inst, const Packing& m, const Rational& eps,
    const Rational& eps_small, bool test_mode = false);

// Splits a packing containing a massive item m into the three candidate sets
// R \ {m}, M_H + V + {m} and M_V + H + {m} via minimum-profit strip deletion,
// packs the most profitable one, and keeps at least (2/3 - O(eps)) of the
// profit. Requires rotations and a massive item.
struct MassiveSplitResult {
  Packing packing;
  long long profit = 0;
  int chosen = -1;  // 0, 1 or 2
  std::vector<long long> candidate_profits;
  std::vector<ContainerLayout> layouts;
};
MassiveSplitResult massive_item_split(const Instance& inst, const Packing& r,
                                      const Rational& eps);

// Removes all items of the packing that intersect a uniformly random strip of
// thickness ceil(eps*N) (horizontal or vertical), shifts the survivors flush
// to close the gap, and returns a packing whose region is reduced by the
// strip thickness in the corresponding dimension. Deterministic under seed.
Packing random_strip_delete(const Instance& inst, const Packing& packing,
                            bool horizontal_strip, const Rational& eps, uint64_t seed);

// The layout family searched by the solvers: shelf grids built from the
// candidate container sizes (k <= 2) plus strip/box splits, capped at
// max_layouts layouts of at most max_containers containers each.
std::vector<ContainerLayout> generate_layouts(const Instance& inst, const RectI& region,
                                              const Rational& eps, size_t max_layouts = 40,
                                              size_t max_containers = 8);

}  // namespace gk
