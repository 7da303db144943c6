#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "gkpack/types.hpp"

namespace gk {

// Coefficient bank of the case-analysis bounds. Row j (1-based) gives the
// coefficients of (x1, x2, x3, x4) in the constraint z >= c_j . x, where the
// x_k are the normalized profit shares of the four item groups (long/short
// crossed with the two structural classes). Vanishing perturbation terms are
// dropped so the clean constants remain.
const std::vector<std::array<Rational, 4>>& inequality_bank();

// Minimizes z subject to: z >= c_j . x for every j in active_set,
// sum_k x_k = 1, and x, z >= 0. Exact rational optimum by vertex enumeration
// over the 5-variable polytope.
Rational solve_case_lp(const std::vector<int>& active_set);

// Checks a candidate dual solution (y_j >= 0 indexed by the active set, plus
// the free multiplier w of the normalization constraint): feasibility requires
// sum_j y_j <= 1 and sum_j c_{j,k} y_j + w >= 0 for k = 1..4. A feasible dual
// certifies the lower bound -w on the primal optimum.
struct DualCheck {
  bool feasible = false;
  Rational bound = 0;  // -w
};
DualCheck verify_dual(const std::vector<int>& active_set,
                      const std::map<int, Rational>& duals, const Rational& w);

// One row of the case analysis: its label, active inequalities, the published
// dual certificate, and the value the LP must attain.
struct CaseRow {
  std::string name;
  std::vector<int> active;
  std::map<int, Rational> duals;
  Rational value = 0;
};
const std::vector<CaseRow>& case_table();

// Maximizes min_j (b_j . x) over the probability simplex (sum x = 1, x >= 0).
// Each element of bounds is one vector b_j of coefficients; all must have the
// same dimension.
Rational max_min_mix(const std::vector<std::vector<Rational>>& bounds);

// The two worst-case share mixes of the top-level analysis:
//  - cardinality: best of {3/4 * long, 1/2 * long + 3/4 * short} over the
//    long/short split, worst at long = 3 * short -> 9/16;
//  - weighted: best of four structural bounds over the four-way split, worst
//    at equal LT/ST/SF shares with LF = 5/4 of them -> 9/17.
struct MixResults {
  Rational cardinality = 0;
  Rational weighted = 0;
};
MixResults worst_case_mixes();

// Human-readable rendition of the case table for the CLI.
std::string format_case_table();

}  // namespace gk
