#pragma once

#include <vector>

#include "gkpack/types.hpp"

namespace gk {

// Maximum generalized assignment with a constant number of bins: item i
// assigned to bin j consumes size s[i][j] of capacity C[j] and yields profit
// p[i][j]; items may stay unassigned.
struct GapInstance {
  std::vector<long long> capacities;            // C_j, one per bin
  std::vector<std::vector<long long>> sizes;    // s[i][j]
  std::vector<std::vector<long long>> profits;  // p[i][j]

  int bins() const { return static_cast<int>(capacities.size()); }
  int items() const { return static_cast<int>(sizes.size()); }
  void check() const;
};

constexpr int kUnassigned = -1;

struct GapResult {
  long long profit = 0;
  std::vector<int> assignment;  // item -> bin index or kUnassigned
};

// Exact optimum by enumerating all (k+1)^n assignments.
GapResult gap_oracle(const GapInstance& inst, long long enumeration_cap = 1LL << 22);

// Exact optimum via the profit table P[i, c_1..c_k]; requires the capacity
// product to stay under the cap.
GapResult gap_dp(const GapInstance& inst, long long table_cap = 1LL << 26);

// Capacity-augmented rounding: mu_j = eps*C_j/n, sizes rounded up to
// multiples of mu_j, capacities extended to floor((1+eps)C_j/mu_j) units.
// Profit >= the exact optimum under the original capacities; the returned
// assignment is feasible under (1+eps)-augmented capacities. Bins with
// eps*C_j < n skip the rounding (their exact sizes are already small).
GapResult gap_augmented(const GapInstance& inst, const Rational& eps,
                        long long table_cap = 1LL << 26);

// Shifting PTAS: guesses up to ceil(1/eps^2) high-profit items per bin,
// reserves their sizes, and runs the augmented DP on the residual capacities
// scaled by (1-eps). Profit >= (1-3*eps) * optimum; the assignment is feasible
// under the ORIGINAL capacities.
GapResult gap_ptas(const GapInstance& inst, const Rational& eps,
                   long long guess_budget = 1LL << 22);

// Per-bin load of an assignment.
std::vector<long long> gap_loads(const GapInstance& inst, const std::vector<int>& assignment);

}  // namespace gk
