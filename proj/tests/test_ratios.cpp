#include <doctest.h>

#include <algorithm>

#include "gkpack/ratios.hpp"

using namespace gk;

TEST_CASE("case table: every row solves to its exact value") {
  const auto& rows = case_table();
  REQUIRE(rows.size() == 6);
  std::vector<Rational> expected = {Rational(5, 8),    Rational(127, 216), Rational(17, 28),
                                    Rational(215, 369), Rational(325, 558), Rational(24, 41)};
  for (size_t i = 0; i < rows.size(); ++i) {
    CAPTURE(rows[i].name);
    CHECK(rows[i].value == expected[i]);
    CHECK(solve_case_lp(rows[i].active) == expected[i]);
  }
}

TEST_CASE("case table: dual certificates are feasible and tight") {
  for (const auto& row : case_table()) {
    CAPTURE(row.name);
    Rational w = -row.value;
    auto dc = verify_dual(row.active, row.duals, w);
    CHECK(dc.feasible);
    CHECK(dc.bound == row.value);
  }
}

TEST_CASE("overall bound is the minimum case value") {
  Rational lo = case_table()[0].value;
  for (const auto& row : case_table()) lo = std::min(lo, row.value);
  CHECK(lo == Rational(325, 558));
}

TEST_CASE("worst-case mixes") {
  auto m = worst_case_mixes();
  CHECK(m.cardinality == Rational(9, 16));
  CHECK(m.weighted == Rational(9, 17));
}

TEST_CASE("max_min_mix edge cases") {
  // A single bound: the maximum of b.x over the simplex is max_k b_k.
  CHECK(max_min_mix({{Rational(1, 3), Rational(2, 3)}}) == Rational(2, 3));
  // All-zero bounds give zero.
  CHECK(max_min_mix({{Rational(0), Rational(0)}, {Rational(0), Rational(0)}}) == 0);
  // The classic two-bound trade-off from the cardinality analysis.
  CHECK(max_min_mix({{Rational(3, 4), Rational(0)}, {Rational(1, 2), Rational(3, 4)}}) ==
        Rational(9, 16));
}

TEST_CASE("dual verifier rejects infeasible certificates") {
  const auto& row = case_table()[0];
  auto bad = row.duals;
  for (auto& [k, v] : bad) v = v * 10;  // violates sum y <= 1
  auto dc = verify_dual(row.active, bad, -row.value);
  CHECK_FALSE(dc.feasible);
}

TEST_CASE("formatted table mentions every case value") {
  auto text = format_case_table();
  for (const char* frac : {"5/8", "127/216", "17/28", "215/369", "325/558", "24/41"})
    CHECK(text.find(frac) != std::string::npos);
}
