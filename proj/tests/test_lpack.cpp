#include <doctest.h>

#include <random>

#include "gkpack/lpack.hpp"
#include "gkpack/validate.hpp"

using namespace gk;

namespace {

std::vector<Rational> full_grid(long long N) {
  std::vector<Rational> g;
  for (long long v = 0; v <= N; ++v) g.emplace_back(v);
  return g;
}

LInstance random_l_instance(std::mt19937_64& rng, int max_items, long long max_N) {
  LInstance li;
  li.shape.N = 4 + (long long)(rng() % (max_N - 3));
  li.shape.h_l = rng() % (li.shape.N + 1);
  li.shape.w_l = rng() % (li.shape.N + 1);
  const int n = 1 + (int)(rng() % max_items);
  for (int i = 0; i < n; ++i) {
    Item it;
    it.id = i + 1;
    it.p = 1 + (long long)(rng() % 10);
    if (rng() % 2 == 0) {
      it.w = li.shape.N / 2 + 1 + (long long)(rng() % (li.shape.N - li.shape.N / 2));
      it.h = 1 + (long long)(rng() % li.shape.N);
      li.hor.push_back(it);
    } else {
      it.h = li.shape.N / 2 + 1 + (long long)(rng() % (li.shape.N - li.shape.N / 2));
      it.w = 1 + (long long)(rng() % li.shape.N);
      li.ver.push_back(it);
    }
  }
  return li;
}

}  // namespace

TEST_CASE("normalize: empty selections -> empty packing") {
  auto p = normalize_l_packing({}, {}, {10, 3, 0});
  REQUIRE(p.has_value());
  CHECK(p->placements.empty());
}

TEST_CASE("normalize: single horizontal right-aligned") {
  auto p = normalize_l_packing({{1, 7, 2, 5}}, {}, {10, 0, 3});  // w_l=0, h_l=3
  REQUIRE(p.has_value());
  REQUIRE(p->placements.size() == 1);
  CHECK(p->placements[0].x == 3);
  CHECK(p->placements[0].y == 0);
}

TEST_CASE("normalize: corner conflict is infeasible") {
  // N=4 full L: a 3x2 horizontal and a 2x3 vertical cannot coexist.
  auto p = normalize_l_packing({{1, 3, 2, 1}}, {{2, 2, 3, 1}}, {4, 4, 4});
  CHECK_FALSE(p.has_value());
}

TEST_CASE("exact dp: empty and single-item cases") {
  LInstance li;
  li.shape = {10, 0, 3};
  CHECK(lpack_exact_dp(li, {0}, {0}).profit == 0);
  li.hor.push_back({1, 7, 2, 5});
  std::vector<Rational> T = {0, 1, 2, 3};
  CHECK(lpack_exact_dp(li, T, {0}).profit == 5);
}

TEST_CASE("exact dp: two-item conflict keeps one") {
  LInstance li;
  li.shape = {4, 4, 4};
  li.hor.push_back({1, 3, 2, 1});
  li.ver.push_back({2, 2, 3, 1});
  CHECK(lpack_exact_dp(li, full_grid(4), full_grid(4)).profit == 1);
}

TEST_CASE("exact dp on the full grid equals the oracle") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 120; ++t) {
    auto li = random_l_instance(rng, 6, 12);
    auto dp = lpack_exact_dp(li, full_grid(li.shape.N), full_grid(li.shape.N));
    auto orc = lpack_oracle(li);
    CAPTURE(t);
    CHECK(dp.profit == orc.profit);
    CHECK(validate_packing(Instance{li.shape.N, false,
                                    [&] {
                                      auto v = li.hor;
                                      v.insert(v.end(), li.ver.begin(), li.ver.end());
                                      return v;
                                    }()},
                           dp.packing)
              .ok);
  }
}

TEST_CASE("growing subsequence examples") {
  CHECK(growing_subsequence({Rational(5)}) == std::vector<size_t>{0});
  CHECK(growing_subsequence({Rational(5), Rational(4), Rational(3)}) == std::vector<size_t>{0});
  CHECK(growing_subsequence({Rational(2), Rational(1), Rational(3), Rational(2), Rational(3)}) ==
        std::vector<size_t>{0, 2, 4});
}

TEST_CASE("delete_and_shift: single item is deleted at level 1") {
  auto res = delete_and_shift({{1, 8, 5, 3}}, 1, Rational(1, 2));
  CHECK(res.deleted.count(1) == 1);
  CHECK(res.shift.empty());
}

TEST_CASE("delete_and_shift: two-item stack level 1") {
  // Bottom item height 3 (the chain head, deleted), top item height 2.
  auto res = delete_and_shift({{1, 8, 3, 1}, {2, 7, 2, 1}}, 1, Rational(1, 2), 2);
  CHECK(res.deleted.count(1) == 1);
  REQUIRE(res.shift.count(2) == 1);
  // base = ceil(0 to multiple of 3/2) = 0; height rounded up to multiple of 3/4.
  CHECK(res.shift.at(2) == round_up_to_multiple(Rational(2), Rational(3, 4)));
}

TEST_CASE("delete_and_shift: kept tops never increase and deletions are cheap") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    const int n = 2 + (int)(rng() % 6);
    std::vector<Item> stack;
    long long widths = 50;
    long long total = 0, bottom = 0;
    std::vector<long long> bottoms;
    for (int i = 0; i < n; ++i) {
      Item it{i + 1, widths - i, 1 + (long long)(rng() % 6), 1 + (long long)(rng() % 9)};
      bottoms.push_back(bottom);
      bottom += it.h;
      total += it.p;
      stack.push_back(it);
    }
    const Rational eps(1, 2);
    for (int r = 1; r <= 2; ++r) {
      auto res = delete_and_shift(stack, r, eps);
      long long dropped = 0;
      for (int i = 0; i < n; ++i) {
        const Item& it = stack[i];
        if (res.deleted.count(it.id)) {
          dropped += it.p;
          CHECK(res.shift.count(it.id) == 0);
        } else {
          REQUIRE(res.shift.count(it.id) == 1);
          CHECK(res.shift.at(it.id) <= Rational(bottoms[i] + it.h));  // never pushed up
          CHECK(res.shift.at(it.id) >= Rational(it.h));               // stays above the floor
        }
      }
      if (r == 2) CHECK(Rational(dropped) <= 2 * eps * total);
    }
  }
}

TEST_CASE("restricted sets: single horizontal item") {
  LInstance li;
  li.shape = {10, 10, 10};
  li.hor.push_back({1, 7, 2, 5});
  auto sets = build_restricted_sets(li, Rational(1, 2));
  REQUIRE(sets.size() == 2);
  // T^1 = {0} plus a*h/(2n) = a*1 for a = 1..4n^2 clipped to N.
  std::vector<Rational> expect;
  for (long long a = 0; a <= 4; ++a) expect.emplace_back(a);
  CHECK(sets[0].T == expect);
  CHECK(sets[0].R == std::vector<Rational>{0});
  CHECK(sets[1].R == std::vector<Rational>{0});
}

TEST_CASE("ptas: single item gets full profit") {
  LInstance li;
  li.shape = {10, 10, 10};
  li.hor.push_back({1, 7, 2, 5});
  CHECK(lpack_ptas(li, Rational(1, 2)).profit == 5);
}

TEST_CASE("ptas achieves (1-2eps) of the oracle") {
  std::mt19937_64 rng(99);
  const Rational eps(1, 2);
  for (int t = 0; t < 60; ++t) {
    auto li = random_l_instance(rng, 6, 16);
    auto ptas = lpack_ptas(li, eps);
    auto orc = lpack_oracle(li);
    CAPTURE(t);
    CHECK(Rational(ptas.profit) >= (1 - 2 * eps) * orc.profit);
  }
}
