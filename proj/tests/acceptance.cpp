// Acceptance suite: one pass/fail line per criterion, exit code 0 only when
// every criterion passes. Each criterion is a self-contained randomized or
// exact check against an independent oracle or a proved bound; every packing
// produced anywhere in the suite is validated (criterion 12).

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "gkpack/containers.hpp"
#include "gkpack/gap.hpp"
#include "gkpack/gen.hpp"
#include "gkpack/longring.hpp"
#include "gkpack/lpack.hpp"
#include "gkpack/ratios.hpp"
#include "gkpack/shelf.hpp"
#include "gkpack/solvers.hpp"
#include "gkpack/steinberg.hpp"
#include "gkpack/validate.hpp"

using namespace gk;

namespace {

long long g_validated = 0;
long long g_validation_failures = 0;

bool check_valid(const Instance& inst, const Packing& p) {
  ++g_validated;
  auto rep = validate_packing(inst, p);
  if (!rep.ok) {
    ++g_validation_failures;
    std::printf("    validation failure: %s\n", rep.violations.front().c_str());
  }
  return rep.ok;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// --- criterion 1: exact case-analysis constants -----------------------------

bool criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  const std::vector<Rational> expected = {Rational(5, 8),     Rational(127, 216),
                                          Rational(17, 28),   Rational(215, 369),
                                          Rational(325, 558), Rational(24, 41)};
  const auto& rows = case_table();
  if (rows.size() != expected.size()) return false;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].value != expected[i]) return false;
    if (solve_case_lp(rows[i].active) != expected[i]) return false;
    auto dc = verify_dual(rows[i].active, rows[i].duals, -rows[i].value);
    if (!dc.feasible || dc.bound != expected[i]) return false;
  }
  auto mixes = worst_case_mixes();
  if (mixes.cardinality != Rational(9, 16) || mixes.weighted != Rational(9, 17)) return false;
  const double secs = seconds_since(t0);
  std::printf("    six case values exact, mixes 9/16 and 9/17, %.3fs\n", secs);
  return secs < 1.0;
}

// --- criterion 2: L-packing DP == oracle ------------------------------------

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

Instance l_to_instance(const LInstance& li) {
  Instance inst;
  inst.N = li.shape.N;
  inst.items = li.hor;
  inst.items.insert(inst.items.end(), li.ver.begin(), li.ver.end());
  return inst;
}

bool criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(1002);
  int mismatches = 0;
  for (int t = 0; t < 500; ++t) {
    auto li = random_l_instance(rng, 6, 12);
    std::vector<Rational> grid;
    for (long long v = 0; v <= li.shape.N; ++v) grid.emplace_back(v);
    auto dp = lpack_exact_dp(li, grid, grid);
    auto orc = lpack_oracle(li);
    if (dp.profit != orc.profit) ++mismatches;
    check_valid(l_to_instance(li), dp.packing);
    check_valid(l_to_instance(li), orc.packing);
  }
  const double secs = seconds_since(t0);
  std::printf("    500 instances, %d mismatches, %.1fs\n", mismatches, secs);
  return mismatches == 0 && secs < 60.0;
}

// --- criterion 3: L-packing PTAS bound --------------------------------------

bool criterion3() {
  std::mt19937_64 rng(1003);
  const Rational eps(1, 2);
  int violations = 0;
  double ratio_sum = 0;
  int ratio_cnt = 0;
  for (int t = 0; t < 200; ++t) {
    auto li = random_l_instance(rng, 8, 20);
    auto ptas = lpack_ptas(li, eps);
    auto orc = lpack_oracle(li);
    if (Rational(ptas.profit) < (1 - 2 * eps) * orc.profit) ++violations;
    check_valid(l_to_instance(li), ptas.packing);
    if (orc.profit > 0) {
      ratio_sum += (double)ptas.profit / (double)orc.profit;
      ++ratio_cnt;
    }
  }
  const double mean = ratio_cnt ? ratio_sum / ratio_cnt : 1.0;
  std::printf("    200 instances, %d bound violations, mean ratio %.3f\n", violations, mean);
  return violations == 0 && mean >= 0.95;
}

// --- criterion 4: ring-to-boundary-L profit ---------------------------------

Packing random_long_packing(const Instance& inst, std::mt19937_64& rng) {
  Packing p;
  p.region = {0, 0, inst.N, inst.N};
  long long bottom_y = 0, top_y = inst.N, left_x = 0, right_x = inst.N;
  for (const auto& it : inst.items) {
    if (2 * it.w > inst.N) {
      if (rng() % 2 == 0) {
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

bool criterion4() {
  std::mt19937_64 rng(1004);
  int ran = 0, violations = 0;
  for (int t = 0; t < 300 && ran < 220; ++t) {
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
    if (p.placements.empty() || !check_valid(inst, p)) continue;
    ++ran;
    auto ring = ring_shift(inst, p);
    const long long in_profit = ring_profit(inst, ring);
    auto res = ring_to_boundary_l(inst, ring);
    if (4 * res.kept_profit < 3 * in_profit) ++violations;
    check_valid(inst, res.packing);
  }

  // The four-equal-fat-stacks fixture keeps exactly three quarters: any
  // boundary L can hold at most three of the four stacks.
  Instance fix;
  fix.N = 10;
  fix.items = {{1, 6, 3, 1}, {2, 6, 3, 1}, {3, 3, 6, 1}, {4, 3, 6, 1}};
  Packing fp;
  fp.region = {0, 0, 10, 10};
  fp.placements = {{1, 4, 0, false}, {2, 0, 7, false}, {3, 0, 1, false}, {4, 7, 3, false}};
  auto fring = ring_shift(fix, fp);
  auto fres = ring_to_boundary_l(fix, fring);
  const bool exact_3_4 = fres.kept_profit == 3 && ring_profit(fix, fring) == 4;
  check_valid(fix, fres.packing);

  std::printf("    %d packings, %d violations, fixture 3/4 %s\n", ran, violations,
              exact_3_4 ? "exact" : "WRONG");
  return ran >= 200 && violations == 0 && exact_3_4;
}

// --- criterion 5: NFDH area guarantee ---------------------------------------

bool criterion5() {
  std::mt19937_64 rng(1005);
  int ran = 0, violations = 0;
  const std::pair<int, int> epses[] = {{1, 10}, {1, 5}, {2, 5}};
  for (int t = 0; t < 240; ++t) {
    const auto [num, den] = epses[t % 3];
    const Rational eps(num, den);
    const long long B = 20 + (long long)(rng() % 60);
    const long long cap = std::max<long long>(1, (B * num) / den);
    std::vector<Item> items;
    long long area = 0;
    const Rational budget = (1 - 2 * eps) * B * B;
    for (int i = 1; i <= 300; ++i) {
      Item it{i, 1 + (long long)(rng() % cap), 1 + (long long)(rng() % cap), 1};
      if (Rational(area + it.w * it.h) > budget) break;
      area += it.w * it.h;
      items.push_back(it);
    }
    if (items.empty()) continue;
    ++ran;
    auto res = nfdh_pack(items, B, B);
    long long packed_area = 0;
    for (const auto& pl : res.packing.placements) {
      for (const auto& it : items)
        if (it.id == pl.item_id) packed_area += it.w * it.h;
    }
    // leftover must be empty and the packed area dominated by the area bound
    const Rational area_bound = std::min(Rational(area), Rational((1 - 2 * eps) * B * B));
    if (!res.leftover.empty() || Rational(packed_area) < area_bound) ++violations;
    Instance inst;
    inst.N = B;
    inst.items = items;
    Packing p = res.packing;
    p.region = {0, 0, B, B};
    check_valid(inst, p);
  }
  std::printf("    %d inputs, %d violations\n", ran, violations);
  return ran >= 200 && violations == 0;
}

// --- criterion 6: Steinberg condition implies full packing ------------------

bool criterion6() {
  std::mt19937_64 rng(1006);
  int ran = 0, violations = 0;
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
    if (p.placements.size() != items.size()) ++violations;
    Instance inst;
    inst.N = std::max(W, H);
    inst.items = items;
    Packing q = p;
    q.region = {0, 0, W, H};
    if (!check_valid(inst, q)) ++violations;
  }
  std::printf("    %d condition-satisfying inputs, %d failures\n", ran, violations);
  return ran >= 200 && violations == 0;
}

// --- criterion 7: GAP oracle equivalence and bounds -------------------------

GapInstance random_gap(std::mt19937_64& rng, int max_bins, int max_items) {
  GapInstance g;
  const int k = 1 + (int)(rng() % max_bins);
  const int n = 1 + (int)(rng() % max_items);
  for (int j = 0; j < k; ++j) g.capacities.push_back(3 + (long long)(rng() % 20));
  for (int i = 0; i < n; ++i) {
    std::vector<long long> s, p;
    for (int j = 0; j < k; ++j) {
      s.push_back(1 + (long long)(rng() % 12));
      p.push_back(1 + (long long)(rng() % 15));
    }
    g.sizes.push_back(s);
    g.profits.push_back(p);
  }
  return g;
}

bool criterion7() {
  std::mt19937_64 rng(1007);
  const Rational eps(1, 4);
  int dp_mismatch = 0, aug_bad = 0, ptas_bad = 0;
  for (int t = 0; t < 220; ++t) {
    auto g = random_gap(rng, 2, 8);
    auto orc = gap_oracle(g);
    if (gap_dp(g).profit != orc.profit) ++dp_mismatch;

    auto aug = gap_augmented(g, eps);
    auto aug_loads = gap_loads(g, aug.assignment);
    bool aug_ok = aug.profit >= orc.profit;
    for (int j = 0; j < g.bins(); ++j)
      if (Rational(aug_loads[j]) > (1 + eps) * g.capacities[j]) aug_ok = false;
    if (!aug_ok) ++aug_bad;

    auto res = gap_ptas(g, eps);
    auto loads = gap_loads(g, res.assignment);
    bool ptas_ok = Rational(res.profit) >= (1 - 3 * eps) * orc.profit;
    for (int j = 0; j < g.bins(); ++j)
      if (loads[j] > g.capacities[j]) ptas_ok = false;
    if (!ptas_ok) ++ptas_bad;
  }
  std::printf("    220 instances: %d dp mismatches, %d augmented, %d shifting failures\n",
              dp_mismatch, aug_bad, ptas_bad);
  return dp_mismatch == 0 && aug_bad == 0 && ptas_bad == 0;
}

// --- criterion 8: container rounding ----------------------------------------

bool criterion8() {
  std::mt19937_64 rng(1008);
  const Rational eps(1, 4);
  int violations = 0;
  for (int t = 0; t < 120; ++t) {
    // shrink: area of the replacement boxes bounded by the item area.
    Container c{ContainerKind::Horizontal, {0, 0, 40 + (long long)(rng() % 40), 0}};
    std::vector<Item> items;
    long long hsum = 0, total_p = 0;
    const int n = 1 + (int)(rng() % 8);
    for (int i = 1; i <= n; ++i) {
      Item it{i, 1 + (long long)(rng() % c.rect.w), 1 + (long long)(rng() % 10),
              1 + (long long)(rng() % 20)};
      hsum += it.h;
      total_p += it.p;
      items.push_back(it);
    }
    c.rect.h = hsum;
    auto res = shrink_container(c, items, eps);
    // Box area is bounded by the ORIGINAL item area: the dropped eps-blocks
    // pay for the (1+eps) width-grouping slack.
    long long item_area = 0, box_area = 0, kept_p = 0;
    for (const auto& it : items) item_area += it.w * it.h;
    for (const auto& grp : res.assigned)
      for (const auto& it : grp) kept_p += it.p;
    for (const auto& nc : res.containers) box_area += nc.rect.w * nc.rect.h;
    if (box_area > item_area || kept_p != res.kept_profit) ++violations;
    if (Rational(res.kept_profit) < (1 - 3 * eps) * total_p) ++violations;

    // round: both rounded sides are candidate sums of the item extents.
    const Rational reps(1, 2);
    long long wmax = 0;
    std::vector<Item> ritems;
    for (int i = 1; i <= 1 + (int)(rng() % 5); ++i) {
      Item it{i, 1 + (long long)(rng() % 15), 1 + (long long)(rng() % 9),
              1 + (long long)(rng() % 10)};
      wmax = std::max(wmax, it.w);
      ritems.push_back(it);
    }
    Container rc{ContainerKind::Horizontal, {0, 0, wmax, 1000}};
    auto rres = round_container(rc, ritems, reps, 2);
    auto cs = candidate_sizes(ritems, 2);
    if (!std::binary_search(cs.widths.begin(), cs.widths.end(), rres.container.rect.w))
      ++violations;
    if (!std::binary_search(cs.heights.begin(), cs.heights.end(), rres.container.rect.h))
      ++violations;
  }
  std::printf("    120 shrink+round runs, %d violations\n", violations);
  return violations == 0;
}

// --- criterion 9: weighted resource contraction -----------------------------

bool criterion9() {
  std::mt19937_64 rng(1009);
  const Rational eps(1, 6);
  int ran = 0, violations = 0;
  for (int t = 0; t < 200 && ran < 120; ++t) {
    Instance inst;
    inst.N = 24 + (long long)(rng() % 48);
    inst.rotations = true;
    std::vector<Item> items;
    for (int i = 1; i <= (int)(3 + rng() % 9); ++i)
      items.push_back({i, 1 + (long long)(rng() % (inst.N / 2)),
                       1 + (long long)(rng() % (inst.N / 2)), 1 + (long long)(rng() % 30)});
    inst.items = items;
    auto shelf = nfdh_pack(items, inst.N, inst.N);
    if (shelf.packing.placements.empty()) continue;
    Packing p = shelf.packing;
    p.region = {0, 0, inst.N, inst.N};
    if (!check_valid(inst, p)) continue;
    ++ran;
    try {
      auto rc = resource_contraction_weighted(inst, p, eps);
      if (!check_valid(inst, rc.packing)) ++violations;
      const long long t_strip = to_ll(rceil(eps * inst.N / 2));
      if (rc.packing.region.w > inst.N - t_strip || rc.packing.region.h > inst.N) ++violations;
      if (2 * rc.kept_profit < p.profit(inst)) ++violations;
    } catch (const std::exception& e) {
      std::printf("    contraction threw: %s\n", e.what());
      ++violations;
    }
  }
  std::printf("    %d packings, %d violations\n", ran, violations);
  return ran >= 100 && violations == 0;
}

// --- criterion 10: cardinality resource contraction (test mode) -------------

bool criterion10() {
  const Rational eps(1, 13);
  const Rational eps_small(1, 900000000LL);  // < 13^-8
  std::mt19937_64 rng(1010);
  int ran = 0, violations = 0;
  for (int t = 0; t < 110; ++t) {
    Instance inst;
    inst.N = 2000000000LL;
    inst.rotations = true;
    const long long N = inst.N;
    Packing p;
    p.region = {0, 0, N, N};
    int id = 0;
    const int cols = 3 + (int)(rng() % 8);
    for (int c = 0; c < cols; ++c) {
      inst.items.push_back({++id, 1 + (long long)(rng() % 2), N, 1});
      p.placements.push_back({id, N / 2 + c * (N / (2 * cols + 2)), 0, false});
    }
    const int rows = 10 + (int)(rng() % 20);
    for (int r = 0; r < rows; ++r) {
      inst.items.push_back(
          {++id, N / 8 + (long long)(rng() % (N / 8)), 1 + (long long)(rng() % 2), 1});
      p.placements.push_back({id, 4 + (long long)(rng() % 4), N / 3 + r * 4, false});
    }
    const int strips = (int)(rng() % 5);
    for (int r = 0; r < strips; ++r) {
      inst.items.push_back({++id, N / 8, 1, 1});
      p.placements.push_back({id, 4, r + 1, false});
      inst.items.push_back({++id, N / 8, 1, 1});
      p.placements.push_back({id, 4, N - 2 - r, false});
    }
    // Occasionally add a bulky (filtered) item in a free pocket.
    if (rng() % 2 == 0) {
      inst.items.push_back({++id, N / 4, N / 8, 1});
      p.placements.push_back({id, 4, 2 * N / 3 + 200, false});
    }
    if (!check_valid(inst, p)) continue;
    ++ran;
    try {
      auto rc = resource_contraction_cardinality(inst, p, eps, eps_small, true);
      if (!check_valid(inst, rc.packing)) ++violations;
      for (const auto& pl : rc.packing.placements) {
        auto r = footprint(*inst.find(pl.item_id), pl);
        if (r.right() > rc.packing.region.right() || r.top() > rc.packing.region.top())
          ++violations;
      }
      if (rc.packing.region.w >= N) ++violations;
      if (Rational((long long)rc.kept_items) <
          Rational(2, 3) * (1 - 10 * rc.eps_s) * (long long)rc.m3_items)
        ++violations;
      // Filter-loss bounds, recomputed independently: items large on both
      // sides occupy disjoint area > (eps_small*N)^2 each, so their count is
      // below 1/eps_small^2; the chosen height band is the cheapest of
      // K = ceil(1/(2 eps)) bands each height hitting at most two of them.
      size_t both_large = 0;
      for (const auto& pl : p.placements) {
        const Item* it = inst.find(pl.item_id);
        if (Rational(it->w) > eps_small * N && Rational(it->h) > eps_small * N) ++both_large;
      }
      const size_t m2 = p.placements.size() - both_large;
      if (Rational((long long)both_large) >= 1 / (eps_small * eps_small)) ++violations;
      const size_t band_loss = m2 - rc.m3_items;
      if (Rational((long long)band_loss) > 4 * eps * (long long)m2) ++violations;
      if (rc.m3_items == 0) ++violations;  // the fixture must exercise the pipeline
    } catch (const std::exception& e) {
      std::printf("    contraction threw: %s\n", e.what());
      ++violations;
    }
  }
  std::printf("    %d packings, %d violations\n", ran, violations);
  return ran >= 100 && violations == 0;
}

// --- criterion 11: end-to-end ratio on the frozen corpus --------------------

bool criterion11() {
  auto t0 = std::chrono::steady_clock::now();
  int below = 0;
  double worst = 1.0;
  for (int seed = 1; seed <= 100; ++seed) {
    const int n = 3 + seed % 5;                    // <= 7
    const long long N = 8 + seed % 8;              // <= 15
    const GenProfile prof = static_cast<GenProfile>(seed % 4);
    Instance inst = generate_instance(n, N, seed, prof);
    for (auto& it : inst.items) it.p = 1;          // cardinality objective
    auto orc = brute_force_oracle(inst);
    auto rep = solve_cardinality(inst, Rational(1, 13));
    check_valid(inst, rep.best);
    const double ratio = orc.profit ? (double)rep.best_profit / orc.profit : 1.0;
    worst = std::min(worst, ratio);
    if (16 * rep.best_profit < 9 * orc.profit) {
      ++below;
      std::printf("    below threshold: seed=%d n=%d N=%lld ratio=%.3f (%lld/%lld)\n", seed, n, N,
                  ratio, rep.best_profit, orc.profit);
    }
  }
  const double secs = seconds_since(t0);
  std::printf("    100 instances, worst ratio %.3f, %d below 9/16, %.1fs\n", worst, below, secs);
  return below == 0;
}

// --- criterion 12: global validation ----------------------------------------

bool criterion12() {
  std::printf("    %lld packings validated, %lld failures\n", g_validated,
              g_validation_failures);
  return g_validated > 0 && g_validation_failures == 0;
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  struct Row {
    const char* name;
    std::function<bool()> fn;
  };
  const Row rows[] = {
      {"case-analysis constants exact", criterion1},
      {"L-packing DP equals oracle", criterion2},
      {"L-packing PTAS bound", criterion3},
      {"ring keeps three quarters", criterion4},
      {"NFDH area guarantee", criterion5},
      {"Steinberg full packing", criterion6},
      {"GAP oracle equivalence and bounds", criterion7},
      {"container rounding invariants", criterion8},
      {"weighted resource contraction", criterion9},
      {"cardinality resource contraction", criterion10},
      {"end-to-end ratio on frozen corpus", criterion11},
      {"global packing validation", criterion12},
  };
  int failed = 0;
  int idx = 0;
  for (const auto& row : rows) {
    ++idx;
    bool ok = false;
    try {
      ok = row.fn();
    } catch (const std::exception& e) {
      std::printf("    unexpected exception: %s\n", e.what());
    }
    std::printf("criterion %2d (%s): %s\n", idx, row.name, ok ? "PASS" : "FAIL");
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  std::printf("total: %d/12 passed, %.1fs\n", 12 - failed, seconds_since(t0));
  return failed == 0 ? 0 : 1;
}
