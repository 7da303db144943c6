#include <doctest.h>

#include <random>

#include "gkpack/shelf.hpp"
#include "gkpack/steinberg.hpp"
#include "gkpack/validate.hpp"

using namespace gk;

namespace {

Instance box_instance(long long w, long long h, const std::vector<Item>& items) {
  Instance inst;
  inst.N = std::max(w, h);
  inst.items = items;
  return inst;
}

bool inside_box(const Instance& inst, const Packing& p, long long w, long long h) {
  for (const auto& pl : p.placements) {
    RectI r = footprint(*inst.find(pl.item_id), pl);
    if (r.x < 0 || r.y < 0 || r.right() > w || r.top() > h) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("nfdh: single item at origin") {
  auto res = nfdh_pack({{1, 4, 3, 1}}, 10, 10);
  CHECK(res.leftover.empty());
  REQUIRE(res.packing.placements.size() == 1);
  CHECK(res.packing.placements[0].x == 0);
  CHECK(res.packing.placements[0].y == 0);
}

TEST_CASE("nfdh: five 2x2 items in one shelf") {
  std::vector<Item> items;
  for (int i = 1; i <= 5; ++i) items.push_back({i, 2, 2, 1});
  auto res = nfdh_pack(items, 10, 10);
  CHECK(res.leftover.empty());
  REQUIRE(res.packing.placements.size() == 5);
  std::vector<long long> xs;
  for (const auto& pl : res.packing.placements) {
    CHECK(pl.y == 0);
    xs.push_back(pl.x);
  }
  std::sort(xs.begin(), xs.end());
  CHECK(xs == std::vector<long long>{0, 2, 4, 6, 8});
}

TEST_CASE("nfdh: area bound yields empty leftover for small items") {
  std::mt19937_64 rng(5);
  for (double epsd : {0.1, 0.2, 0.4}) {
    for (int t = 0; t < 80; ++t) {
      const long long B = 20 + (long long)(rng() % 60);
      const long long cap = std::max<long long>(1, (long long)(epsd * B));
      std::vector<Item> items;
      long long area = 0;
      const long long budget = (long long)((1 - 2 * epsd) * B * B);
      for (int i = 1; i <= 200; ++i) {
        Item it{i, 1 + (long long)(rng() % cap), 1 + (long long)(rng() % cap), 1};
        if (area + it.w * it.h > budget) break;
        area += it.w * it.h;
        items.push_back(it);
      }
      auto res = nfdh_pack(items, B, B);
      CAPTURE(epsd);
      CAPTURE(t);
      CHECK(res.leftover.empty());
      auto inst = box_instance(B, B, items);
      CHECK(validate_packing(inst, res.packing).ok);
      CHECK(inside_box(inst, res.packing, B, B));
    }
  }
}

TEST_CASE("steinberg: documented arithmetic examples") {
  std::vector<Item> three;
  for (int i = 1; i <= 3; ++i) three.push_back({i, 4, 4, 1});
  CHECK(steinberg_condition(three, 10, 10));  // 2*48 <= 100
  auto p = steinberg_pack(three, 10, 10);
  CHECK(p.placements.size() == 3);
  CHECK(validate_packing(box_instance(10, 10, three), p).ok);

  CHECK(steinberg_pack({}, 10, 10).placements.empty());
}

TEST_CASE("steinberg: random feasible inputs always pack fully") {
  std::mt19937_64 rng(11);
  int ran = 0;
  for (int t = 0; t < 3000 && ran < 220; ++t) {
    const long long W = 8 + (long long)(rng() % 40);
    const long long H = 8 + (long long)(rng() % 40);
    std::vector<Item> items;
    // Mostly sub-half sides so the area condition has a real chance; every
    // tenth item may be big to exercise the max-side terms.
    for (int i = 1; i <= (int)(2 + rng() % 10); ++i) {
      const long long bw = i % 10 == 0 ? W : std::max<long long>(1, W / 2);
      const long long bh = i % 10 == 0 ? H : std::max<long long>(1, H / 2);
      items.push_back({i, 1 + (long long)(rng() % bw), 1 + (long long)(rng() % bh), 1});
    }
    if (!steinberg_condition(items, W, H)) continue;
    ++ran;
    auto p = steinberg_pack(items, W, H);
    CAPTURE(t);
    CHECK(p.placements.size() == items.size());
    auto inst = box_instance(W, H, items);
    CHECK(validate_packing(inst, p).ok);
    CHECK(inside_box(inst, p, W, H));
  }
  CHECK(ran >= 200);
}

TEST_CASE("steinberg: condition violation reports slack") {
  std::vector<Item> items = {{1, 10, 10, 1}, {2, 10, 10, 1}};
  CHECK_FALSE(steinberg_condition(items, 10, 10));
  CHECK(steinberg_slack(items, 10, 10) < 0);
  CHECK_THROWS_AS(steinberg_pack(items, 10, 10), std::invalid_argument);
}

TEST_CASE("small_stein_pack: corollary budget example") {
  // N=100, eps_large=1/20, alpha=beta=1/10: budget (1/2 - 0.2*0.6 - 0.02)*N^2 = 3600.
  std::mt19937_64 rng(17);
  std::vector<Item> items;
  long long area = 0;
  for (int i = 1; area < 3400; ++i) {
    Item it{i, 1 + (long long)(rng() % 20), 1 + (long long)(rng() % 20), 1};
    if (area + it.w * it.h > 3600) break;
    area += it.w * it.h;
    items.push_back(it);
  }
  auto p = small_stein_pack(items, Rational(1, 10), Rational(1, 10), Rational(1, 20), 100);
  CHECK(p.placements.size() == items.size());
  auto inst = box_instance(100, 100, items);
  CHECK(validate_packing(inst, p).ok);
  CHECK(inside_box(inst, p, 90, 90));
}

TEST_CASE("area_prefix_select examples") {
  std::vector<Item> items = {{1, 1, 1, 1}, {2, 1, 2, 1}, {3, 1, 3, 1}, {4, 2, 2, 1}};
  CHECK(area_prefix_select(items, 0).empty());
  CHECK(area_prefix_select(items, 100).size() == 4);
  auto sel = area_prefix_select(items, 6);  // areas 1,2,3,4 -> prefix {1,2,3}
  REQUIRE(sel.size() == 3);
  CHECK(sel[0].id == 1);
  CHECK(sel[1].id == 2);
  CHECK(sel[2].id == 3);
}
