#include <doctest.h>

#include <random>

#include "gkpack/longring.hpp"
#include "gkpack/validate.hpp"

using namespace gk;

namespace {

Instance long_instance(long long N, std::vector<Item> items) {
  Instance inst;
  inst.N = N;
  inst.items = std::move(items);
  return inst;
}

size_t ring_size(const RingPacking& r) {
  return r.left.size() + r.right.size() + r.top.size() + r.bottom.size();
}

// Random valid packing of long items along the four boundary rings.
Packing random_long_packing(const Instance& inst, std::mt19937_64& rng) {
  Packing p;
  p.region = {0, 0, inst.N, inst.N};
  long long bottom_y = 0, top_y = inst.N, left_x = 0, right_x = inst.N;
  for (const auto& it : inst.items) {
    if (2 * it.w > inst.N) {
      if (rng() % 2 == 0 && bottom_y + it.h + (top_y - inst.N) <= top_y - it.h) {
        if (bottom_y + it.h > top_y) continue;
        p.placements.push_back({it.id, inst.N - it.w, bottom_y, false});
        bottom_y += it.h;
      } else if (top_y - it.h >= bottom_y) {
        top_y -= it.h;
        p.placements.push_back({it.id, 0, top_y, false});
      }
    } else {
      if (rng() % 2 == 0) {
        if (left_x + it.w > right_x) continue;
        p.placements.push_back({it.id, left_x, inst.N - it.h, false});
        left_x += it.w;
      } else if (right_x - it.w >= left_x) {
        right_x -= it.w;
        p.placements.push_back({it.id, right_x, 0, false});
      }
    }
  }
  // The corner boxes may still clash; drop later items that overlap.
  Packing clean;
  clean.region = p.region;
  std::vector<RectI> placed;
  for (const auto& pl : p.placements) {
    RectI r = footprint(*inst.find(pl.item_id), pl);
    bool ok = true;
    for (const auto& o : placed)
      if (interiors_overlap(r, o)) ok = false;
    if (ok) {
      placed.push_back(r);
      clean.placements.push_back(pl);
    }
  }
  return clean;
}

}  // namespace

TEST_CASE("ring_shift: single horizontal item lands in one stack") {
  auto inst = long_instance(10, {{1, 7, 2, 5}});
  Packing p;
  p.region = {0, 0, 10, 10};
  p.placements = {{1, 1, 4, false}};
  auto ring = ring_shift(inst, p);
  CHECK(ring_size(ring) == 1);
  CHECK(ring.top.size() + ring.bottom.size() == 1);
}

TEST_CASE("ring_shift: flush items stay put") {
  auto inst = long_instance(10, {{1, 7, 2, 5}, {2, 2, 7, 3}});
  Packing p;
  p.region = {0, 0, 10, 10};
  p.placements = {{1, 3, 0, false}, {2, 0, 3, false}};
  auto ring = ring_shift(inst, p);
  REQUIRE(ring.bottom.size() == 1);
  CHECK(ring.bottom[0].y == 0);
  REQUIRE(ring.left.size() == 1);
  CHECK(ring.left[0].x == 0);
}

TEST_CASE("ring_shift: corner fixture fills four distinct stacks") {
  auto inst = long_instance(12,
                            {{1, 7, 2, 1}, {2, 7, 2, 1}, {3, 2, 7, 1}, {4, 2, 7, 1}});
  Packing p;
  p.region = {0, 0, 12, 12};
  p.placements = {{1, 5, 0, false}, {2, 0, 10, false}, {3, 0, 0, false}, {4, 10, 5, false}};
  REQUIRE(validate_packing(inst, p).ok);
  auto ring = ring_shift(inst, p);
  CHECK(ring_size(ring) == 4);
  CHECK(ring.bottom.size() == 1);
  CHECK(ring.top.size() == 1);
  CHECK(ring.left.size() == 1);
  CHECK(ring.right.size() == 1);
}

TEST_CASE("ring_to_boundary_l: four equal stacks keep exactly 3/4") {
  // Fat stacks: any boundary L can hold at most three of the four.
  auto inst = long_instance(10,
                            {{1, 6, 3, 1}, {2, 6, 3, 1}, {3, 3, 6, 1}, {4, 3, 6, 1}});
  Packing p;
  p.region = {0, 0, 10, 10};
  p.placements = {{1, 4, 0, false}, {2, 0, 7, false}, {3, 0, 1, false}, {4, 7, 3, false}};
  REQUIRE(validate_packing(inst, p).ok);
  auto ring = ring_shift(inst, p);
  REQUIRE(ring_size(ring) == 4);
  auto res = ring_to_boundary_l(inst, ring);
  CHECK(res.kept_profit == 3);
  CHECK(res.packing.placements.size() == 3);
  CHECK(validate_packing(inst, res.packing).ok);
}

TEST_CASE("ring_to_boundary_l: single stack keeps everything") {
  auto inst = long_instance(10, {{1, 7, 2, 5}, {2, 8, 1, 3}});
  Packing p;
  p.region = {0, 0, 10, 10};
  p.placements = {{1, 3, 0, false}, {2, 2, 2, false}};
  auto ring = ring_shift(inst, p);
  auto res = ring_to_boundary_l(inst, ring);
  CHECK(res.kept_profit == 8);
  CHECK(validate_packing(inst, res.packing).ok);
}

TEST_CASE("ring pipeline keeps >= 3/4 on random long packings") {
  std::mt19937_64 rng(31337);
  int ran = 0;
  for (int t = 0; t < 250; ++t) {
    Instance inst;
    inst.N = 10 + (long long)(rng() % 30);
    const int n = 2 + (int)(rng() % 7);
    for (int i = 0; i < n; ++i) {
      Item it;
      it.id = i + 1;
      it.p = 1 + (long long)(rng() % 20);
      if (rng() % 2 == 0) {
        it.w = inst.N / 2 + 1 + (long long)(rng() % (inst.N - inst.N / 2));
        it.h = 1 + (long long)(rng() % (inst.N / 3 + 1));
      } else {
        it.h = inst.N / 2 + 1 + (long long)(rng() % (inst.N - inst.N / 2));
        it.w = 1 + (long long)(rng() % (inst.N / 3 + 1));
      }
      inst.items.push_back(it);
    }
    Packing p = random_long_packing(inst, rng);
    if (p.placements.empty()) continue;
    REQUIRE(validate_packing(inst, p).ok);
    ++ran;
    auto ring = ring_shift(inst, p);
    long long in_profit = ring_profit(inst, ring);
    auto res = ring_to_boundary_l(inst, ring);
    CAPTURE(t);
    CHECK(4 * res.kept_profit >= 3 * in_profit);
    CHECK(validate_packing(inst, res.packing).ok);
    CHECK(Rational(res.shape.h_l) <= inst.N);
  }
  CHECK(ran >= 200);
}
