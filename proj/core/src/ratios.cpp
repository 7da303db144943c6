#include "gkpack/ratios.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace gk {
namespace {

using Row = std::vector<Rational>;

// Solves the square rational system A v = b by Gaussian elimination.
// Returns nullopt when A is singular.
std::optional<Row> solve_square(std::vector<Row> a, Row b) {
  const size_t n = b.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  Row v(n);
  for (size_t i = 0; i < n; ++i) v[i] = b[i] / a[i][i];
  return v;
}

// Optimizes the first coordinate of v over the polyhedron
//   ineq_lhs[j] . v >= ineq_rhs[j]  for all j,   eq_lhs . v == eq_rhs,
// by enumerating basic solutions: every vertex makes dim-1 inequalities tight
// together with the single equality. Throws when the system has no vertex.
Rational extreme_value(size_t dim, const std::vector<Row>& ineq_lhs,
                       const std::vector<Rational>& ineq_rhs, const Row& eq_lhs,
                       const Rational& eq_rhs, bool maximize) {
  const size_t m = ineq_lhs.size();
  const size_t need = dim - 1;
  if (m < need) throw std::logic_error("underdetermined case system");
  std::vector<size_t> pick(need);
  std::optional<Rational> best;
  // Enumerate all size-(dim-1) subsets of the inequalities.
  auto visit = [&](const std::vector<size_t>& idx) {
    std::vector<Row> a;
    Row b;
    a.push_back(eq_lhs);
    b.push_back(eq_rhs);
    for (size_t j : idx) {
      a.push_back(ineq_lhs[j]);
      b.push_back(ineq_rhs[j]);
    }
    auto v = solve_square(std::move(a), std::move(b));
    if (!v) return;
    for (size_t j = 0; j < m; ++j) {
      Rational lhs = 0;
      for (size_t c = 0; c < dim; ++c) lhs += ineq_lhs[j][c] * (*v)[c];
      if (lhs < ineq_rhs[j]) return;
    }
    const Rational z = (*v)[0];
    if (!best || (maximize ? z > *best : z < *best)) best = z;
  };
  std::vector<size_t> idx;
  auto rec = [&](auto&& self, size_t start) -> void {
    if (idx.size() == need) {
      visit(idx);
      return;
    }
    for (size_t j = start; j + (need - idx.size()) <= m; ++j) {
      idx.push_back(j);
      self(self, j + 1);
      idx.pop_back();
    }
  };
  rec(rec, 0);
  if (!best) throw std::logic_error("case system has no vertex");
  return *best;
}

}  // namespace

const std::vector<std::array<Rational, 4>>& inequality_bank() {
  auto q = [](long long a, long long b) { return Rational(a, b); };
  static const std::vector<std::array<Rational, 4>> bank = {
      {q(3, 4), q(3, 4), 1, q(1, 2)},    // 1
      {q(3, 4), q(3, 4), 0, 0},          // 2
      {q(1, 2), q(1, 2), q(3, 4), q(3, 4)},  // 3
      {0, 1, 0, 1},                      // 4
      {q(1, 2), 1, 0, q(1, 2)},          // 5
      {q(3, 4), q(3, 4), 1, 0},          // 6
      {q(3, 4), 0, 1, q(5, 6)},          // 7
      {q(3, 4), q(3, 4), q(5, 12), q(5, 12)},  // 8
      {q(3, 4), 0, 1, q(2, 3)},          // 9
      {q(3, 4), q(3, 4), 1, q(7, 48)},   // 10
      {q(3, 4), q(3, 4), 1, q(5, 36)},   // 11
      {q(1, 2), q(1, 2), 1, q(3, 4)},    // 12
      {q(3, 4), 0, 1, 1},                // 13
  };
  return bank;
}

Rational solve_case_lp(const std::vector<int>& active_set) {
  const auto& bank = inequality_bank();
  // Variables v = (z, x1, x2, x3, x4).
  std::vector<Row> lhs;
  std::vector<Rational> rhs;
  for (int j : active_set) {
    if (j < 1 || j > static_cast<int>(bank.size()))
      throw std::invalid_argument("inequality index out of range");
    Row row(5);
    row[0] = 1;
    for (int k = 0; k < 4; ++k) row[k + 1] = -bank[j - 1][k];
    lhs.push_back(std::move(row));  // z - c_j . x >= 0
    rhs.push_back(0);
  }
  for (int i = 0; i < 5; ++i) {  // z >= 0 and x >= 0
    Row row(5);
    row[i] = 1;
    lhs.push_back(std::move(row));
    rhs.push_back(0);
  }
  Row eq(5);  // x1 + x2 + x3 + x4 = 1
  for (int k = 1; k < 5; ++k) eq[k] = 1;
  return extreme_value(5, lhs, rhs, eq, 1, /*maximize=*/false);
}

DualCheck verify_dual(const std::vector<int>& active_set,
                      const std::map<int, Rational>& duals, const Rational& w) {
  const auto& bank = inequality_bank();
  DualCheck out;
  out.bound = -w;
  Rational ysum = 0;
  std::array<Rational, 4> col = {w, w, w, w};
  for (const auto& [j, y] : duals) {
    if (std::find(active_set.begin(), active_set.end(), j) == active_set.end())
      return out;  // dual variable outside the active set
    if (y < 0) return out;
    ysum += y;
    for (int k = 0; k < 4; ++k) col[k] += bank[j - 1][k] * y;
  }
  if (ysum > 1) return out;
  for (int k = 0; k < 4; ++k)
    if (col[k] < 0) return out;
  out.feasible = true;
  return out;
}

const std::vector<CaseRow>& case_table() {
  auto q = [](long long a, long long b) { return Rational(a, b); };
  static const std::vector<CaseRow> table = [&] {
    std::vector<CaseRow> t;
    t.push_back({"1", {1, 3, 4, 5}, {{1, q(1, 2)}, {3, q(1, 2)}}, q(5, 8)});
    t.push_back({"2A(i)",
                 {3, 4, 5, 6, 7},
                 {{3, q(17, 54)}, {5, q(1, 3)}, {6, q(7, 54)}, {7, q(2, 9)}},
                 q(127, 216)});
    t.push_back({"2A(ii)", {3, 4, 5, 6, 8}, {{3, q(4, 7)}, {8, q(3, 7)}}, q(17, 28)});
    t.push_back({"2A(iii)a",
                 {3, 4, 5, 9, 10},
                 {{3, q(124, 369)}, {5, q(1, 3)}, {9, q(2, 9)}, {10, q(40, 369)}},
                 q(215, 369)});
    t.push_back({"2A(iii)b",
                 {3, 4, 5, 9, 11},
                 {{3, q(94, 279)}, {5, q(1, 3)}, {9, q(2, 9)}, {11, q(10, 93)}},
                 q(325, 558)});
    t.push_back({"2B",
                 {2, 4, 5, 12, 13},
                 {{2, q(8, 41)}, {5, q(9, 41)}, {12, q(18, 41)}, {13, q(6, 41)}},
                 q(24, 41)});
    return t;
  }();
  return table;
}

Rational max_min_mix(const std::vector<std::vector<Rational>>& bounds) {
  if (bounds.empty()) throw std::invalid_argument("no bounds given");
  const size_t n = bounds.front().size();
  for (const auto& b : bounds)
    if (b.size() != n) throw std::invalid_argument("bound dimension mismatch");
  // Variables v = (z, x1..xn); maximize z s.t. b_j . x - z >= 0, x >= 0,
  // sum x = 1.
  std::vector<Row> lhs;
  std::vector<Rational> rhs;
  for (const auto& b : bounds) {
    Row row(n + 1);
    row[0] = -1;
    for (size_t k = 0; k < n; ++k) row[k + 1] = b[k];
    lhs.push_back(std::move(row));
    rhs.push_back(0);
  }
  for (size_t i = 1; i <= n; ++i) {
    Row row(n + 1);
    row[i] = 1;
    lhs.push_back(std::move(row));
    rhs.push_back(0);
  }
  Row eq(n + 1);
  for (size_t k = 1; k <= n; ++k) eq[k] = 1;
  return extreme_value(n + 1, lhs, rhs, eq, 1, /*maximize=*/true);
}

MixResults worst_case_mixes() {
  auto q = [](long long a, long long b) { return Rational(a, b); };
  MixResults out;
  // Shares (long, short): the L-packing route earns 3/4 of the long profit;
  // the restricted-knapsack route earns 1/2 of long plus 3/4 of short.
  out.cardinality = max_min_mix({{q(3, 4), 0}, {q(1, 2), q(3, 4)}});
  // Shares (LF, LT, SF, ST): the four structural bounds.
  out.weighted = max_min_mix({
      {1, 0, 1, 0},                      // LF + SF
      {1, q(1, 2), q(1, 2), 0},          // LF + LT/2 + SF/2
      {1, 0, q(1, 2), q(1, 2)},          // LF + SF/2 + ST/2
      {0, q(3, 4), q(1, 2), 1},          // 3/4 LT + SF/2 + ST
  });
  return out;
}

std::string format_case_table() {
  std::ostringstream os;
  os << "case       active            value\n";
  for (const auto& row : case_table()) {
    os << row.name;
    for (size_t i = row.name.size(); i < 11; ++i) os << ' ';
    std::ostringstream act;
    for (size_t i = 0; i < row.active.size(); ++i)
      act << (i ? "," : "") << row.active[i];
    os << act.str();
    for (size_t i = act.str().size(); i < 18; ++i) os << ' ';
    os << row.value << "\n";
  }
  const auto mix = worst_case_mixes();
  os << "worst case value: "
     << std::min_element(case_table().begin(), case_table().end(),
                         [](const CaseRow& a, const CaseRow& b) {
                           return a.value < b.value;
                         })
            ->value
     << "\n";
  os << "cardinality mix: " << mix.cardinality << "\n";
  os << "weighted mix: " << mix.weighted << "\n";
  return os.str();
}

}  // namespace gk
