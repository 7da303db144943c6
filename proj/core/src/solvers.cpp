#include "gkpack/solvers.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

#include "gkpack/gap.hpp"
#include "gkpack/io.hpp"
#include "gkpack/longring.hpp"
#include "gkpack/shelf.hpp"
#include "gkpack/steinberg.hpp"
#include "gkpack/validate.hpp"

namespace gk {
namespace {

struct PV {
  Placement pl;
  RectI r;
  const Item* it = nullptr;
};

std::vector<PV> make_views(const Instance& inst, const Packing& p) {
  std::vector<PV> out;
  out.reserve(p.placements.size());
  for (const auto& pl : p.placements) {
    const Item* it = inst.find(pl.item_id);
    if (!it) throw std::invalid_argument("packing references unknown item");
    out.push_back({pl, footprint(*it, pl), it});
  }
  return out;
}

long long views_profit(const std::vector<PV>& v) {
  long long s = 0;
  for (const auto& e : v) s += e.it->p;
  return s;
}

Packing transpose_packing(const Packing& p) {
  Packing out;
  out.region = {p.region.y, p.region.x, p.region.h, p.region.w};
  for (const auto& pl : p.placements)
    out.placements.push_back({pl.item_id, pl.y, pl.x, !pl.rotated});
  return out;
}

PV transpose_view(const PV& e) {
  PV out = e;
  out.pl = {e.pl.item_id, e.pl.y, e.pl.x, !e.pl.rotated};
  out.r = {e.r.y, e.r.x, e.r.h, e.r.w};
  return out;
}

std::vector<PV> transpose_views(const std::vector<PV>& v) {
  std::vector<PV> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(transpose_view(e));
  return out;
}

// Mirror across the vertical axis of an N-wide frame.
void mirror_x(std::vector<PV>& v, long long N) {
  for (auto& e : v) {
    e.pl.x = N - e.r.right();
    e.r.x = e.pl.x;
  }
}

void mirror_y(std::vector<PV>& v, long long N) {
  for (auto& e : v) {
    e.pl.y = N - e.r.top();
    e.r.y = e.pl.y;
  }
}

enum class Side { Left, Right, Top, Bottom };

// Rigid 90-degree re-embedding of items contained in a boundary strip of
// thickness `thick`: a vertical strip becomes a horizontal band anchored at
// `offset` (and vice versa). Disjointness is preserved because the map is a
// reflection along the diagonal composed with a translation.
std::vector<Placement> strip_transposed(const std::vector<PV>& items, Side side, long long N,
                                        long long thick, long long offset) {
  std::vector<Placement> out;
  for (const auto& e : items) {
    long long nx = 0, ny = 0;
    switch (side) {
      case Side::Left:  // [0,thick] x [0,N] -> [0,N] x [offset, offset+thick]
        nx = e.r.y;
        ny = offset + e.r.x;
        break;
      case Side::Right:  // [N-thick,N] x [0,N] -> [0,N] x [offset, offset+thick]
        nx = e.r.y;
        ny = offset + (e.r.x - (N - thick));
        break;
      case Side::Top:  // [0,N] x [N-thick,N] -> [offset, offset+thick] x [0,N]
        nx = offset + (e.r.y - (N - thick));
        ny = e.r.x;
        break;
      case Side::Bottom:  // [0,N] x [0,thick] -> [offset, offset+thick] x [0,N]
        nx = offset + e.r.y;
        ny = e.r.x;
        break;
    }
    out.push_back({e.pl.item_id, nx, ny, !e.pl.rotated});
  }
  return out;
}

Packing merge_packings(const RectI& region, std::initializer_list<const Packing*> parts) {
  Packing out;
  out.region = region;
  for (const Packing* p : parts)
    out.placements.insert(out.placements.end(), p->placements.begin(), p->placements.end());
  out.canonicalize();
  return out;
}

// Greedy prefix of the non-decreasing-area order packed with the classical
// two-dimensional packer, offset into the given box. Returns an empty packing
// when the box is degenerate.
Packing steinberg_box_fill(const std::vector<Item>& candidates, const RectI& box) {
  Packing out;
  out.region = box;
  if (box.w <= 0 || box.h <= 0) return out;
  std::vector<Item> fitting;
  for (const auto& it : candidates)
    if (it.w <= box.w && it.h <= box.h) fitting.push_back(it);
  std::vector<Item> sel = area_prefix_select(fitting, box.w * box.h / 2);
  while (!sel.empty() && !steinberg_condition(sel, box.w, box.h)) sel.pop_back();
  if (sel.empty()) return out;
  Packing inner = steinberg_pack(sel, box.w, box.h);
  for (auto pl : inner.placements) {
    pl.x += box.x;
    pl.y += box.y;
    out.placements.push_back(pl);
  }
  return out;
}

// Best single item that fits the knapsack (possibly rotated).
std::optional<Packing> best_single_item(const Instance& inst) {
  const Item* best = nullptr;
  bool best_rot = false;
  for (const auto& it : inst.items) {
    if (it.w > inst.N || it.h > inst.N) continue;  // the square bin is rotation-symmetric
    if (!best || it.p > best->p || (it.p == best->p && it.id < best->id)) best = &it;
  }
  if (!best) return std::nullopt;
  Packing p;
  p.region = {0, 0, inst.N, inst.N};
  p.placements.push_back({best->id, 0, 0, best_rot});
  return p;
}

void consider(SolveReport& rep, const Instance& inst, const std::string& name,
              const Packing& cand) {
  auto v = validate_packing(inst, cand);
  if (!v.ok) return;
  long long p = cand.profit(inst);
  rep.candidate_profits[name] = std::max(rep.candidate_profits.count(name)
                                             ? rep.candidate_profits[name]
                                             : std::numeric_limits<long long>::min(),
                                         p);
  if (p > rep.best_profit ||
      (p == rep.best_profit && serialize_packing(cand) < serialize_packing(rep.best))) {
    rep.best_profit = p;
    rep.best = cand;
  }
}

LInstance long_item_l_instance(const Instance& inst, const LShape& shape, long long ell) {
  LInstance li;
  li.shape = shape;
  for (const auto& it : inst.items) {
    if (it.w > inst.N || it.h > inst.N) continue;
    if (it.w > ell)
      li.hor.push_back(it);
    else if (it.h > ell)
      li.ver.push_back(it);
  }
  return li;
}

}  // namespace

// ---------------------------------------------------------------------------
// Brute-force oracle
// ---------------------------------------------------------------------------

namespace {

std::vector<long long> extent_sums(const Instance& inst, bool widths) {
  const long long N = inst.N;
  std::vector<char> reach(N + 1, 0);
  reach[0] = 1;
  for (const auto& it : inst.items) {
    std::vector<long long> adds;
    adds.push_back(widths ? it.w : it.h);
    if (inst.rotations) adds.push_back(widths ? it.h : it.w);
    for (long long a : adds) {
      if (a <= 0 || a > N) continue;
      for (long long s = N - a; s >= 0; --s)
        if (reach[s]) reach[s + a] = 1;
    }
  }
  std::vector<long long> out;
  for (long long s = 0; s <= N; ++s)
    if (reach[s]) out.push_back(s);
  return out;
}

bool backtrack_place(const Instance& inst, const std::vector<const Item*>& items, size_t idx,
                     std::vector<RectI>& placed, std::vector<Placement>& out,
                     const std::vector<long long>& xs, const std::vector<long long>& ys) {
  if (idx == items.size()) return true;
  const Item& it = *items[idx];
  const long long N = inst.N;
  for (int rot = 0; rot < (inst.rotations && it.w != it.h ? 2 : 1); ++rot) {
    const long long fw = rot ? it.h : it.w;
    const long long fh = rot ? it.w : it.h;
    if (fw > N || fh > N) continue;
    for (long long x : xs) {
      if (x + fw > N) break;
      if (idx == 0 && 2 * x > N - fw) break;  // mirror symmetry
      for (long long y : ys) {
        if (y + fh > N) break;
        if (idx == 0 && 2 * y > N - fh) break;
        RectI r{x, y, fw, fh};
        bool ok = true;
        for (const auto& o : placed)
          if (interiors_overlap(r, o)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        placed.push_back(r);
        out.push_back({it.id, x, y, rot != 0});
        if (backtrack_place(inst, items, idx + 1, placed, out, xs, ys)) return true;
        placed.pop_back();
        out.pop_back();
      }
    }
  }
  return false;
}

}  // namespace

OracleResult brute_force_oracle(const Instance& inst, int item_cap) {
  const int n = static_cast<int>(inst.items.size());
  if (n > item_cap) throw resource_error("brute_force_oracle: instance too large");
  const long long N = inst.N;
  const auto xs = extent_sums(inst, true);
  const auto ys = extent_sums(inst, false);

  std::vector<std::pair<long long, unsigned>> subsets;
  subsets.reserve(1u << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    long long p = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) p += inst.items[i].p;
    subsets.push_back({p, mask});
  }
  std::sort(subsets.begin(), subsets.end(),
            [](const auto& a, const auto& b) { return a.first != b.first ? a.first > b.first
                                                                         : a.second < b.second; });

  OracleResult best;
  best.packing.region = {0, 0, N, N};
  for (const auto& [profit, mask] : subsets) {
    if (profit <= best.profit) break;
    std::vector<const Item*> items;
    BigInt area = 0;
    bool fits = true;
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      const Item& it = inst.items[i];
      const long long mn = std::min(it.w, it.h), mx = std::max(it.w, it.h);
      if (mx > N || (!inst.rotations && (it.w > N || it.h > N)) || mn > N) {
        fits = false;
        break;
      }
      area += BigInt(it.w) * it.h;
      items.push_back(&it);
    }
    if (!fits || area > BigInt(N) * N) continue;
    std::sort(items.begin(), items.end(), [](const Item* a, const Item* b) {
      const long long aa = a->w * a->h, ab = b->w * b->h;
      return aa != ab ? aa > ab : a->id < b->id;
    });
    std::vector<RectI> placed;
    std::vector<Placement> out;
    if (backtrack_place(inst, items, 0, placed, out, xs, ys)) {
      best.profit = profit;
      best.packing.placements = out;
      best.packing.canonicalize();
    }
  }
  return best;
}

// ---------------------------------------------------------------------------
// Random strip deletion
// ---------------------------------------------------------------------------

Packing random_strip_delete(const Instance& inst, const Packing& packing, bool horizontal_strip,
                            const Rational& eps, uint64_t seed) {
  if (eps <= 0 || eps >= 1) throw std::invalid_argument("random_strip_delete: eps in (0,1)");
  const long long N = inst.N;
  const long long t = std::min<long long>(N, to_ll(rceil(eps * N)));
  Packing out;
  out.region = horizontal_strip ? RectI{0, 0, N, N - t} : RectI{0, 0, N - t, N};
  if (t >= N) return out;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> dist(0, N - t);
  const long long a = dist(rng);

  for (const auto& pl : packing.placements) {
    const Item* it = inst.find(pl.item_id);
    if (!it) continue;
    RectI r = footprint(*it, pl);
    const long long lo = horizontal_strip ? r.y : r.x;
    const long long hi = horizontal_strip ? r.top() : r.right();
    if (hi <= a) {
      out.placements.push_back(pl);
    } else if (lo >= a + t) {
      Placement q = pl;
      (horizontal_strip ? q.y : q.x) -= t;
      out.placements.push_back(q);
    }
  }
  out.canonicalize();
  return out;
}

// ---------------------------------------------------------------------------
// Weighted resource contraction
// ---------------------------------------------------------------------------

namespace {

// Packs the chosen half into the width-contracted frame; candidates built in
// the "height-contracted" orientation are transposed on emission.
Packing finish_contraction(std::vector<Placement> pls, long long N, long long t,
                           bool height_contracted) {
  Packing p;
  p.region = {0, 0, N, N - t};
  p.placements = std::move(pls);
  if (height_contracted) p = transpose_packing(p);
  p.region = {0, 0, N - t, N};
  p.canonicalize();
  return p;
}

}  // namespace

ContractionResult resource_contraction_weighted(const Instance& inst, const Packing& m,
                                                const Rational& eps) {
  if (eps <= 0 || eps > Rational(1, 5))
    throw std::invalid_argument("resource_contraction_weighted: eps must be in (0, 1/5]");
  if (!inst.rotations)
    throw std::invalid_argument("resource_contraction_weighted: rotations required");
  {
    auto rep = validate_packing(inst, m);
    if (!rep.ok) throw std::invalid_argument("resource_contraction_weighted: invalid packing");
  }
  const long long N = inst.N;
  const long long t = to_ll(rceil(eps * N / 2));
  std::vector<PV> all = make_views(inst, m);
  for (const auto& e : all)
    if (Rational(e.it->w) >= (1 - eps) * N && Rational(e.it->h) >= (1 - eps) * N)
      throw std::invalid_argument("resource_contraction_weighted: massive item present");

  ContractionResult res;
  res.packing.region = {0, 0, N - t, N};
  if (all.empty()) return res;

  // Integer strip thresholds: bottom [0,t), top (N-3t,N], sides of width t.
  auto in_sb = [&](const RectI& r) { return r.y < t; };
  auto in_st = [&](const RectI& r) { return r.top() > N - 3 * t; };
  auto in_sl = [&](const RectI& r) { return r.x < t; };
  auto in_sr = [&](const RectI& r) { return r.right() > N - t; };
  auto cont_l = [&](const RectI& r) { return r.right() <= t; };
  auto cont_r = [&](const RectI& r) { return r.x >= N - t; };
  auto cont_t = [&](const RectI& r) { return r.y >= N - 3 * t; };
  auto cont_b = [&](const RectI& r) { return r.top() <= t; };
  auto crossing = [&](const RectI& r) { return in_sb(r) && in_st(r); };

  // Candidate halves; each is a full partition of the items.
  std::vector<std::pair<std::vector<Placement>, bool>> cands;  // (placements, height_contracted)

  auto classify_crossings = [&]() {
    const PV* avoid_both = nullptr;
    const PV* touch_both = nullptr;
    const PV* one_side = nullptr;
    bool any = false;
    for (const auto& e : all) {
      if (!crossing(e.r)) continue;
      any = true;
      const bool l = in_sl(e.r), r = in_sr(e.r);
      if (!l && !r && !avoid_both) avoid_both = &e;
      if (l && r && !touch_both) touch_both = &e;
      if ((l != r) && !cont_l(e.r) && !cont_r(e.r) && !one_side) one_side = &e;
    }
    return std::tuple(any, avoid_both, touch_both, one_side);
  };

  auto [any_crossing, avoid_both, touch_both, one_side] = classify_crossings();

  if (any_crossing && avoid_both && (!touch_both)) {
    // Case 2A: a crossing item away from both side strips. Normalize so that
    // its left coordinate is minimal (mirror if needed).
    PV i = *avoid_both;
    if (N - i.r.right() < i.r.x) {
      mirror_x(all, N);
      auto redo = classify_crossings();
      avoid_both = std::get<1>(redo);
      if (!avoid_both) throw std::logic_error("contraction: mirror lost the crossing item");
      i = *avoid_both;
    }
    std::vector<Placement> left_half, right_half;
    std::vector<PV> mid_t, mid_b;
    for (const auto& e : all) {
      if (e.pl.item_id == i.pl.item_id) continue;
      if (e.r.right() <= i.r.x) {
        left_half.push_back(e.pl);
      } else if (e.r.x >= i.r.right()) {
        Placement q = e.pl;
        q.x -= i.r.x;
        right_half.push_back(q);
      } else if (cont_t(e.r)) {
        mid_t.push_back(e);
      } else if (cont_b(e.r)) {
        mid_b.push_back(e);
      } else {
        throw std::logic_error("contraction 2A: item neither beside nor in a cap strip");
      }
    }
    auto st = strip_transposed(mid_t, Side::Top, N, 3 * t, i.r.x);
    auto sb = strip_transposed(mid_b, Side::Bottom, N, t, i.r.x + 3 * t);
    left_half.insert(left_half.end(), st.begin(), st.end());
    left_half.insert(left_half.end(), sb.begin(), sb.end());
    Placement qi = i.pl;
    qi.x -= i.r.x;
    right_half.push_back(qi);
    cands.push_back({left_half, false});
    cands.push_back({right_half, false});
    res.case_name = "2A";
  } else if (any_crossing && touch_both) {
    // Case 2B: a crossing item spanning the whole width.
    const PV i = *touch_both;
    std::vector<Placement> low_half, top_half;
    std::vector<PV> side_l, side_r;
    const long long top_i = i.r.top();
    for (const auto& e : all) {
      if (cont_l(e.r))
        side_l.push_back(e);
      else if (cont_r(e.r))
        side_r.push_back(e);
      else if (e.r.y >= top_i) {
        Placement q = e.pl;
        q.y -= top_i;
        top_half.push_back(q);
      } else {
        low_half.push_back(e.pl);  // includes i itself; tops <= top_i <= N-t
      }
    }
    auto sl = strip_transposed(side_l, Side::Left, N, t, 3 * t);
    auto sr = strip_transposed(side_r, Side::Right, N, t, 4 * t);
    top_half.insert(top_half.end(), sl.begin(), sl.end());
    top_half.insert(top_half.end(), sr.begin(), sr.end());
    cands.push_back({low_half, true});
    cands.push_back({top_half, true});
    res.case_name = "2B";
  } else if (any_crossing && one_side) {
    // Case 2C with a crossing item sticking out of one side strip. Mirror so
    // that it sticks out of the left one.
    PV i = *one_side;
    if (in_sr(i.r)) {
      mirror_x(all, N);
      auto redo = classify_crossings();
      one_side = std::get<3>(redo);
      if (!one_side) throw std::logic_error("contraction: mirror lost the side item");
      i = *one_side;
    }
    std::vector<Placement> with_i, other;
    std::vector<PV> mid_t, mid_b;
    const long long right_i = i.r.right();
    const bool left_small = 2 * right_i <= N;
    for (const auto& e : all) {
      const bool is_i = e.pl.item_id == i.pl.item_id;
      if (is_i) {
        with_i.push_back(e.pl);
        continue;
      }
      if (e.r.right() <= i.r.x) {
        with_i.push_back(e.pl);
      } else if (e.r.x >= right_i) {
        Placement q = e.pl;
        q.x -= right_i;
        other.push_back(q);
      } else if (cont_t(e.r)) {
        mid_t.push_back(e);
      } else if (cont_b(e.r)) {
        mid_b.push_back(e);
      } else {
        throw std::logic_error("contraction 2C: item neither beside nor in a cap strip");
      }
    }
    const long long strip_x = left_small ? right_i : (N - right_i);
    auto st = strip_transposed(mid_t, Side::Top, N, 3 * t, strip_x);
    auto sb = strip_transposed(mid_b, Side::Bottom, N, t, strip_x + 3 * t);
    auto& strips_host = left_small ? with_i : other;
    strips_host.insert(strips_host.end(), st.begin(), st.end());
    strips_host.insert(strips_host.end(), sb.begin(), sb.end());
    cands.push_back({with_i, false});
    cands.push_back({other, false});
    res.case_name = "2C";
  } else {
    // Case 1 (no crossing item) or Case 2C with all crossing items contained
    // in the side strips: decouple the top strip from the rest.
    std::vector<Placement> top_half, low_half;
    std::vector<PV> side_l, side_r;
    for (const auto& e : all) {
      if (cont_l(e.r)) {
        side_l.push_back(e);
      } else if (cont_r(e.r)) {
        side_r.push_back(e);
      } else if (in_st(e.r)) {
        Placement q = e.pl;
        q.y -= t;  // does not meet the bottom strip, so y >= t
        top_half.push_back(q);
      } else {
        low_half.push_back(e.pl);  // top <= N - 3t
      }
    }
    auto sl = strip_transposed(side_l, Side::Left, N, t, N - 3 * t);
    auto sr = strip_transposed(side_r, Side::Right, N, t, N - 2 * t);
    low_half.insert(low_half.end(), sl.begin(), sl.end());
    low_half.insert(low_half.end(), sr.begin(), sr.end());
    cands.push_back({top_half, true});
    cands.push_back({low_half, true});
    res.case_name = any_crossing ? "2C-contained" : "1";
  }

  long long best = -1;
  for (auto& [pls, transposed] : cands) {
    Packing p = finish_contraction(std::move(pls), N, t, transposed);
    auto rep = validate_packing(inst, p);
    if (!rep.ok)
      throw std::logic_error("resource_contraction_weighted: constructed half invalid: " +
                             rep.violations.front());
    long long prof = p.profit(inst);
    if (prof > best) {
      best = prof;
      res.packing = std::move(p);
    }
  }
  res.kept_profit = best;
  res.kept_items = res.packing.placements.size();
  if (2 * best < views_profit(all))
    throw std::logic_error("resource_contraction_weighted: halves below half profit");
  return res;
}

// ---------------------------------------------------------------------------
// Cardinality resource contraction
// ---------------------------------------------------------------------------

CardinalityContractionResult resource_contraction_cardinality(const Instance& inst,
                                                              const Packing& m,
                                                              const Rational& eps,
                                                              const Rational& eps_small,
                                                              bool test_mode) {
  if (eps <= 0 || eps > Rational(1, 13))
    throw std::invalid_argument("resource_contraction_cardinality: eps must be in (0, 1/13]");
  if (!inst.rotations)
    throw std::invalid_argument("resource_contraction_cardinality: rotations required");
  const long long K = to_ll(rceil(1 / (2 * eps)));
  Rational eps_pow = eps;
  for (long long i = 0; i < K; ++i) eps_pow *= eps;  // eps^(K+1)
  if (eps_small <= 0 || eps_small >= eps_pow)
    throw std::invalid_argument(
        "resource_contraction_cardinality: eps_small must be in (0, eps^(ceil(1/(2 eps))+1))");
  {
    auto rep = validate_packing(inst, m);
    if (!rep.ok)
      throw std::invalid_argument("resource_contraction_cardinality: invalid packing");
  }
  const long long N = inst.N;
  if (!test_mode && Rational(static_cast<long long>(m.placements.size())) * eps_small *
                            eps_small * eps_small <
                        1)
    throw std::invalid_argument("resource_contraction_cardinality: packing too small");

  CardinalityContractionResult res;
  const long long t_out = to_ll(rceil(eps_pow * N));
  res.packing.region = {0, 0, N - t_out, N};
  if (m.placements.empty()) return res;

  // Filter items that are large on both sides.
  std::vector<PV> v2;
  for (const auto& e : make_views(inst, m))
    if (!(Rational(e.it->w) > eps_small * N && Rational(e.it->h) > eps_small * N))
      v2.push_back(e);

  // Cheapest height band: footprint heights in ((1-2 eps^i) N, (1-eps^(i+1)) N].
  long long best_i = 1;
  size_t best_count = v2.size() + 1;
  for (long long i = 1; i <= K; ++i) {
    Rational lo = 1, hi = 1;
    Rational p = 1;
    for (long long j = 0; j < i; ++j) p *= eps;
    lo = (1 - 2 * p) * N;
    hi = (1 - p * eps) * N;
    size_t cnt = 0;
    for (const auto& e : v2)
      if (Rational(e.r.h) > lo && Rational(e.r.h) <= hi) ++cnt;
    if (cnt < best_count) {
      best_count = cnt;
      best_i = i;
    }
  }
  Rational es = 1;
  for (long long j = 0; j < best_i; ++j) es *= eps;  // eps_s = eps^i
  res.eps_s = es;
  std::vector<PV> v3;
  for (const auto& e : v2)
    if (!(Rational(e.r.h) > (1 - 2 * es) * N && Rational(e.r.h) <= (1 - es * eps) * N))
      v3.push_back(e);
  res.m3_items = v3.size();

  // Orient so that the top/bottom strip pair carries at most half the area.
  auto strip_areas = [&](const std::vector<PV>& v) {
    BigInt horiz = 0, vert = 0;
    for (const auto& e : v) {
      const BigInt a = BigInt(e.r.w) * e.r.h;
      if (Rational(e.r.y) < es * N || Rational(e.r.top()) > (1 - es) * N) horiz += a;
      if (Rational(e.r.x) < es * N || Rational(e.r.right()) > (1 - es) * N) vert += a;
    }
    return std::pair(horiz, vert);
  };
  bool transposed_frame = false;
  {
    auto [horiz, vert] = strip_areas(v3);
    if (horiz > vert) {
      v3 = transpose_views(v3);
      transposed_frame = true;
    }
  }
  (void)transposed_frame;

  const long long t = to_ll(rceil(es * N));          // eps_s strip, integer
  const long long t2 = to_ll(rceil(es * eps * N));   // eps*eps_s strip, integer

  auto in_sb = [&](const RectI& r) { return Rational(r.y) < es * N; };
  auto in_st = [&](const RectI& r) { return Rational(r.top()) > (1 - es) * N; };
  std::vector<PV> X, Y, Z;
  for (const auto& e : v3) {
    if (in_sb(e.r) && in_st(e.r))
      X.push_back(e);
    else if (in_sb(e.r) || in_st(e.r))
      Y.push_back(e);
    else
      Z.push_back(e);
  }
  long long wX = 0;
  for (const auto& e : X) wX += e.r.w;

  std::vector<Packing> candidates;

  if (Rational(wX) >= 12 * eps * es * N) {
    // Case A: delete the crossing columns, close the gaps, and re-pack a
    // width-selected part of them (plus the thin cap strips) on the right.
    res.case_name = "A";
    std::vector<PV> capped_t, capped_b, rest;
    for (const auto& e : v3) {
      if (in_sb(e.r) && in_st(e.r)) continue;  // X, handled below
      if (Rational(e.r.y) >= (1 - eps * es) * N)
        capped_t.push_back(e);
      else if (Rational(e.r.top()) <= eps * es * N)
        capped_b.push_back(e);
      else
        rest.push_back(e);
    }
    std::vector<RectI> cols;
    for (const auto& e : X) {
      if (!(Rational(e.r.y) < eps * es * N && Rational(e.r.top()) > (1 - eps * es) * N))
        throw std::logic_error("contraction A: crossing item not very tall");
      cols.push_back(e.r);
    }
    std::sort(cols.begin(), cols.end(), [](const RectI& a, const RectI& b) { return a.x < b.x; });
    std::vector<Placement> pls;
    for (const auto& e : rest) {
      long long shift = 0;
      for (const auto& c : cols) {
        if (c.right() <= e.r.x)
          shift += c.w;
        else if (interiors_overlap(c, e.r))
          throw std::logic_error("contraction A: leftover item overlaps a freed column");
      }
      Placement q = e.pl;
      q.x -= shift;
      pls.push_back(q);
    }
    long long cursor = N - wX;
    auto st = strip_transposed(capped_t, Side::Top, N, t2, cursor);
    auto sb = strip_transposed(capped_b, Side::Bottom, N, t2, cursor + t2);
    pls.insert(pls.end(), st.begin(), st.end());
    pls.insert(pls.end(), sb.begin(), sb.end());
    cursor += 2 * t2;
    std::vector<PV> xs_sorted = X;
    std::sort(xs_sorted.begin(), xs_sorted.end(),
              [](const PV& a, const PV& b) { return a.r.w != b.r.w ? a.r.w < b.r.w
                                                                   : a.it->id < b.it->id; });
    long long cum = 0;
    for (const auto& e : xs_sorted) {
      if (cum + e.r.w > wX - 3 * t2) break;
      pls.push_back({e.pl.item_id, cursor + cum, 0, e.pl.rotated});
      cum += e.r.w;
    }
    Packing p;
    p.region = {0, 0, N - t_out, N};
    p.placements = std::move(pls);
    p.canonicalize();
    candidates.push_back(std::move(p));
  } else {
    // Case B.
    res.case_name = "B";
    size_t top_only = 0, bottom_only = 0;
    for (const auto& e : Y)
      (in_st(e.r) ? top_only : bottom_only)++;
    std::vector<PV> w = v3;
    if (top_only > bottom_only) mirror_y(w, N);

    // Candidate 1: drop the top-strip items, stack the crossing items rotated
    // in the freed band, then transpose into the width-contracted frame.
    {
      std::vector<Placement> pls;
      long long cursor = N - t;
      bool ok = true;
      for (const auto& e : w) {
        if (in_sb(e.r) && in_st(e.r)) {
          if (cursor + e.r.w > N) {
            ok = false;
            break;
          }
          pls.push_back({e.pl.item_id, 0, cursor, !e.pl.rotated});
          cursor += e.r.w;
        } else if (!in_st(e.r)) {
          pls.push_back(e.pl);
        }
      }
      if (ok && cursor <= N - t_out) {
        Packing p;
        p.region = {0, 0, N, N - t_out};
        p.placements = std::move(pls);
        p = transpose_packing(p);
        p.region = {0, 0, N - t_out, N};
        p.canonicalize();
        candidates.push_back(std::move(p));
      }
    }

    // Candidate 2: Steinberg re-pack of an area prefix of the strip items
    // (rotated so the small side is the width) into the contracted frame.
    {
      std::vector<Item> xy;
      std::vector<char> rotated_for;
      for (const auto& e : X) xy.push_back(*e.it);
      for (const auto& e : Y) xy.push_back(*e.it);
      for (auto& it : xy)
        if (it.w > it.h) std::swap(it.w, it.h);  // logical rotation marker below
      std::sort(xy.begin(), xy.end(), [](const Item& a, const Item& b) {
        const long long aa = a.w * a.h, ab = b.w * b.h;
        return aa != ab ? aa < ab : a.id < b.id;
      });
      std::vector<Item> sel;
      BigInt cum = 0;
      const BigInt cap = BigInt(N - t) * N;
      for (const auto& it : xy) {
        const BigInt a = BigInt(it.w) * it.h;
        if (2 * (cum + a) > cap) break;
        cum += a;
        sel.push_back(it);
      }
      (void)rotated_for;
      if (!sel.empty() && steinberg_condition(sel, N - t, N)) {
        Packing inner = steinberg_pack(sel, N - t, N);
        // Items whose sides we swapped must carry the rotation flag.
        for (auto& pl : inner.placements) {
          const Item* orig = inst.find(pl.item_id);
          const Item* used = nullptr;
          for (const auto& s : sel)
            if (s.id == pl.item_id) used = &s;
          if (orig && used && (orig->w != used->w || orig->h != used->h))
            pl.rotated = !pl.rotated;
        }
        inner.region = {0, 0, N - t_out, N};
        inner.canonicalize();
        candidates.push_back(std::move(inner));
      }
    }
  }

  size_t best = 0;
  bool have = false;
  for (auto& p : candidates) {
    auto rep = validate_packing(inst, p);
    if (!rep.ok)
      throw std::logic_error("resource_contraction_cardinality: candidate invalid: " +
                             rep.violations.front());
    if (!have || p.placements.size() > best) {
      best = p.placements.size();
      res.packing = std::move(p);
      have = true;
    }
  }
  if (!have) throw std::logic_error("resource_contraction_cardinality: no feasible candidate");
  res.kept_items = best;
  return res;
}

// ---------------------------------------------------------------------------
// Massive item split
// ---------------------------------------------------------------------------

namespace {

// Packs M_H + V + {m} given the low-profit vertical strip (xlo,xhi) and
// horizontal strip (ylo,yhi) of the frame the views live in.
Packing build_massive_side(const Instance& inst, const std::vector<PV>& views, const PV& mv,
                           const Rational& xlo, const Rational& xhi, const Rational& ylo,
                           const Rational& yhi) {
  const long long N = inst.N;
  const RectI& mr = mv.r;
  auto edge_in = [](const Rational& lo, const Rational& hi, long long a, long long b) {
    return (Rational(a) > lo && Rational(a) < hi) || (Rational(b) > lo && Rational(b) < hi);
  };
  Packing out;
  out.region = {0, 0, N, N};
  out.placements.push_back({mv.pl.item_id, 0, 0, mv.pl.rotated});

  // M_H: items fully crossing the vertical strip; stack above m.
  std::vector<const PV*> mh;
  std::vector<const PV*> vside;
  for (const auto& e : views) {
    if (e.pl.item_id == mv.pl.item_id) continue;
    if (edge_in(xlo, xhi, e.r.x, e.r.right()) || edge_in(ylo, yhi, e.r.y, e.r.top()))
      continue;  // deleted strips
    const bool overlaps_v = Rational(e.r.x) < xhi && Rational(e.r.right()) > xlo;
    const bool overlaps_h = Rational(e.r.y) < yhi && Rational(e.r.top()) > ylo;
    if (overlaps_v) {
      mh.push_back(&e);
    } else if (!overlaps_h && (e.r.right() <= mr.x || e.r.x >= mr.right())) {
      vside.push_back(&e);
    }
  }
  std::sort(mh.begin(), mh.end(), [](const PV* a, const PV* b) { return a->r.y < b->r.y; });
  long long cursor = mr.h;
  for (const PV* e : mh) {
    if (cursor + e->r.h > N) throw std::logic_error("massive split: crossing stack overflows");
    out.placements.push_back({e->pl.item_id, 0, cursor, e->pl.rotated});
    cursor += e->r.h;
  }

  // V: side items, compressed vertically across the deleted horizontal strip
  // and moved into the column right of m.
  const long long d = to_ll(rfloor(yhi - ylo));
  for (const PV* e : vside) {
    Placement q = e->pl;
    if (Rational(e->r.y) >= yhi) q.y -= d;
    if (e->r.right() <= mr.x)
      q.x += mr.w;  // left margin slides right of m
    const RectI fp = footprint(*e->it, q);
    if (fp.top() > mr.h || fp.right() > N)
      throw std::logic_error("massive split: side item escapes its column");
    out.placements.push_back(q);
  }
  out.canonicalize();
  return out;
}

}  // namespace

MassiveSplitResult massive_item_split(const Instance& inst, const Packing& r,
                                      const Rational& eps) {
  if (eps <= 0 || eps >= Rational(1, 6))
    throw std::invalid_argument("massive_item_split: eps must be in (0, 1/6)");
  if (!inst.rotations) throw std::invalid_argument("massive_item_split: rotations required");
  {
    auto rep = validate_packing(inst, r);
    if (!rep.ok) throw std::invalid_argument("massive_item_split: invalid packing");
  }
  const long long N = inst.N;
  std::vector<PV> views = make_views(inst, r);
  const PV* massive = nullptr;
  for (const auto& e : views)
    if (Rational(e.it->w) >= (1 - eps) * N && Rational(e.it->h) >= (1 - eps) * N) {
      massive = &e;
      break;
    }
  if (!massive) throw std::invalid_argument("massive_item_split: no massive item");

  const long long k = to_ll(rceil(1 / (3 * eps)));
  auto strip_bounds = [&](long long j) {
    const Rational step = Rational((1 - 2 * eps) * N) / k;
    return std::pair<Rational, Rational>(eps * N + step * j, eps * N + step * (j + 1));
  };
  auto strip_profit = [&](bool vertical, long long j) {
    auto [lo, hi] = strip_bounds(j);
    long long p = 0;
    for (const auto& e : views) {
      if (e.pl.item_id == massive->pl.item_id) continue;
      const long long a = vertical ? e.r.x : e.r.y;
      const long long b = vertical ? e.r.right() : e.r.top();
      if ((Rational(a) > lo && Rational(a) < hi) || (Rational(b) > lo && Rational(b) < hi))
        p += e.it->p;
    }
    return p;
  };
  long long si = 0, tj = 0;
  for (long long j = 1; j < k; ++j) {
    if (strip_profit(true, j) < strip_profit(true, si)) si = j;
    if (strip_profit(false, j) < strip_profit(false, tj)) tj = j;
  }
  auto [xlo, xhi] = strip_bounds(si);
  auto [ylo, yhi] = strip_bounds(tj);

  MassiveSplitResult res;

  // Candidate 0: everything but m, each item turned flat, packed two-
  // dimensionally into the reduced-height bin.
  Packing cand0;
  {
    std::vector<Item> flat;
    for (const auto& e : views) {
      if (e.pl.item_id == massive->pl.item_id) continue;
      Item it = *e.it;
      if (it.h > it.w) std::swap(it.w, it.h);
      flat.push_back(it);
    }
    const long long bh = to_ll(rfloor(Rational(N) / (1 + eps)));
    cand0.region = {0, 0, N, N};
    if (!flat.empty()) {
      if (!steinberg_condition(flat, N, bh))
        throw std::logic_error("massive split: flat repack condition fails");
      Packing inner = steinberg_pack(flat, N, bh);
      for (auto& pl : inner.placements) {
        const Item* orig = inst.find(pl.item_id);
        if (orig && orig->h > orig->w) pl.rotated = !pl.rotated;
        cand0.placements.push_back(pl);
      }
    }
    cand0.canonicalize();
  }

  Packing cand1 = build_massive_side(inst, views, *massive, xlo, xhi, ylo, yhi);
  Packing cand2;
  {
    std::vector<PV> tv = transpose_views(views);
    PV mt = transpose_view(*massive);
    cand2 = transpose_packing(build_massive_side(inst, tv, mt, ylo, yhi, xlo, xhi));
    cand2.region = {0, 0, N, N};
    cand2.canonicalize();
  }

  std::vector<Packing> cands = {std::move(cand0), std::move(cand1), std::move(cand2)};
  for (int c = 0; c < 3; ++c) {
    auto rep = validate_packing(inst, cands[c]);
    if (!rep.ok)
      throw std::logic_error("massive_item_split: candidate invalid: " + rep.violations.front());
    res.candidate_profits.push_back(cands[c].profit(inst));
    if (res.chosen < 0 || res.candidate_profits[c] > res.profit) {
      res.profit = res.candidate_profits[c];
      res.chosen = c;
    }
  }
  res.packing = cands[res.chosen];

  // Descriptive container layouts of the three candidates.
  const RectI mr = massive->r;
  const long long bh = to_ll(rfloor(Rational(N) / (1 + eps)));
  res.layouts.resize(3);
  res.layouts[0].containers = {{ContainerKind::Area, {0, 0, N, bh}}};
  res.layouts[1].containers = {{ContainerKind::Horizontal, {0, 0, mr.w, mr.h}},
                               {ContainerKind::Horizontal, {0, mr.h, N, N - mr.h}},
                               {ContainerKind::Vertical, {mr.w, 0, N - mr.w, mr.h}}};
  res.layouts[2].containers = {{ContainerKind::Vertical, {0, 0, mr.w, mr.h}},
                               {ContainerKind::Vertical, {mr.w, 0, N - mr.w, N}},
                               {ContainerKind::Horizontal, {0, mr.h, mr.w, N - mr.h}}};
  return res;
}

// ---------------------------------------------------------------------------
// Layout generation
// ---------------------------------------------------------------------------

std::vector<ContainerLayout> generate_layouts(const Instance& inst, const RectI& region,
                                              const Rational& eps, size_t max_layouts,
                                              size_t max_containers) {
  std::vector<ContainerLayout> out;
  const long long W = region.w, H = region.h;
  if (W <= 0 || H <= 0 || max_layouts == 0) return out;
  auto push = [&](std::vector<Container> cs) {
    if (out.size() >= max_layouts || cs.size() > max_containers) return;
    out.push_back({std::move(cs)});
  };
  push({{ContainerKind::Area, region}});
  push({{ContainerKind::Horizontal, region}});
  push({{ContainerKind::Vertical, region}});

  CandidateSizes cs;
  try {
    cs = candidate_sizes(inst.items, 2);
  } catch (const resource_error&) {
    cs = candidate_sizes(inst.items, 1);
  }
  auto sample = [&](const std::vector<long long>& vals, long long cap) {
    std::vector<long long> in;
    for (long long v : vals)
      if (v > 0 && v < cap) in.push_back(v);
    std::vector<long long> sel;
    const size_t want = 4;
    if (in.size() <= want) return in;
    for (size_t i = 0; i < want; ++i) sel.push_back(in[i * (in.size() - 1) / (want - 1)]);
    sel.erase(std::unique(sel.begin(), sel.end()), sel.end());
    return sel;
  };
  std::vector<long long> ws = sample(cs.widths, W);
  std::vector<long long> hs = sample(cs.heights, H);
  // Thin boundary strips for skinny leftover items.
  const long long sw = std::max<long long>(1, to_ll(rceil(eps * W)));
  const long long sh = std::max<long long>(1, to_ll(rceil(eps * H)));
  if (sw < W) ws.insert(ws.begin(), sw);
  if (sh < H) hs.insert(hs.begin(), sh);

  for (long long w : ws)
    push({{ContainerKind::Vertical, {region.x, region.y, w, H}},
          {ContainerKind::Area, {region.x + w, region.y, W - w, H}}});
  for (long long h : hs)
    push({{ContainerKind::Horizontal, {region.x, region.y, W, h}},
          {ContainerKind::Area, {region.x, region.y + h, W, H - h}}});
  // Boundary-L-style split: two thin strips for skinny items plus the
  // complementary box.
  if (sw < W && sh < H && max_containers >= 3)
    push({{ContainerKind::Vertical, {region.x, region.y, sw, H}},
          {ContainerKind::Horizontal, {region.x + sw, region.y, W - sw, sh}},
          {ContainerKind::Area, {region.x + sw, region.y + sh, W - sw, H - sh}}});
  if (max_containers >= 4) {
    for (long long w : ws)
      for (long long h : hs)
        push({{ContainerKind::Horizontal, {region.x, region.y, w, h}},
              {ContainerKind::Vertical, {region.x + w, region.y, W - w, h}},
              {ContainerKind::Area, {region.x, region.y + h, w, H - h}},
              {ContainerKind::Area, {region.x + w, region.y + h, W - w, H - h}}});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Top-level solvers
// ---------------------------------------------------------------------------

namespace {

void consider_container_layouts(SolveReport& rep, const Instance& full_inst,
                                const Instance& sub_inst, const RectI& region,
                                const Rational& eps, const std::string& name,
                                const Packing* extra = nullptr) {
  const size_t max_containers = sub_inst.items.size() <= 8 ? 2 : 2;
  for (const auto& layout : generate_layouts(sub_inst, region, eps, 12, max_containers)) {
    try {
      ContainerPackResult cp = pack_into_containers(sub_inst, layout, eps);
      Packing merged = cp.packing;
      merged.region = {0, 0, full_inst.N, full_inst.N};
      if (extra)
        merged.placements.insert(merged.placements.end(), extra->placements.begin(),
                                 extra->placements.end());
      merged.canonicalize();
      consider(rep, full_inst, name, merged);
    } catch (const resource_error&) {
    } catch (const std::logic_error&) {
    }
  }
}

Instance sub_instance(const Instance& inst, const std::vector<Item>& items) {
  Instance s;
  s.N = inst.N;
  s.rotations = inst.rotations;
  s.items = items;
  return s;
}

}  // namespace

SolveReport solve_cardinality(const Instance& inst, const Rational& eps) {
  if (eps <= 0 || eps > Rational(1, 13))
    throw std::invalid_argument("solve_cardinality: eps must be in (0, 1/13]");
  const long long N = inst.N;
  SolveReport rep;
  rep.best.region = {0, 0, N, N};
  if (auto single = best_single_item(inst)) consider(rep, inst, "single", *single);

  // (a) Full-knapsack L-packing of the long items.
  LInstance li = long_item_l_instance(inst, {N, N, N}, N / 2);
  LPackResult full_l;
  try {
    full_l = lpack_ptas(li, eps);
    consider(rep, inst, "lpack-full", full_l.packing);
  } catch (const std::exception&) {
  }

  // (b), (c): container packings in the reduced knapsacks.
  const long long Hr = to_ll(rfloor(Rational(N) / (1 + eps)));
  consider_container_layouts(rep, inst, inst, {0, 0, N, Hr}, eps, "containers-h");
  consider_container_layouts(rep, inst, inst, {0, 0, Hr, N}, eps, "containers-v");

  // (d) Ring route: push the long-item packing into boundary stacks, drop the
  // cheapest stack, repack as a boundary L and fill the free box with an area
  // prefix of the short items.
  if (!full_l.packing.placements.empty()) {
    try {
      RingPacking ring = ring_shift(inst, full_l.packing);
      RingToLResult rtl = ring_to_boundary_l(inst, ring);
      std::vector<Item> shorts;
      for (const auto& it : inst.items)
        if (it.w <= N / 2 && it.h <= N / 2) shorts.push_back(it);
      RectI box{rtl.shape.w_l, rtl.shape.h_l, N - rtl.shape.w_l, N - rtl.shape.h_l};
      Packing fill = steinberg_box_fill(shorts, box);
      Packing merged = merge_packings({0, 0, N, N}, {&rtl.packing, &fill});
      consider(rep, inst, "ring-l", merged);
    } catch (const std::exception&) {
    }
  }

  // Boundary-L variant with thin arms plus a short-item box.
  {
    const long long arm = std::max<long long>(1, to_ll(rceil(eps * eps * N)));
    LInstance bi = long_item_l_instance(inst, {N, arm, arm}, N / 2);
    try {
      LPackResult lr = lpack_ptas(bi, eps);
      std::vector<Item> shorts;
      for (const auto& it : inst.items)
        if (it.w <= N / 2 && it.h <= N / 2) shorts.push_back(it);
      Packing fill = steinberg_box_fill(shorts, {arm, arm, N - arm, N - arm});
      Packing merged = merge_packings({0, 0, N, N}, {&lr.packing, &fill});
      consider(rep, inst, "boundary-l", merged);
    } catch (const std::exception&) {
    }
  }

  rep.best.canonicalize();
  return rep;
}

SolveReport solve_weighted(const Instance& inst, const Rational& eps) {
  if (eps <= 0 || eps > Rational(1, 13))
    throw std::invalid_argument("solve_weighted: eps must be in (0, 1/13]");
  const long long N = inst.N;
  SolveReport rep;
  rep.best.region = {0, 0, N, N};
  if (auto single = best_single_item(inst)) consider(rep, inst, "single", *single);

  std::set<long long> ells;
  for (const auto& it : inst.items) {
    if (it.w > N / 2 && it.w <= N) ells.insert(it.w);
    if (it.h > N / 2 && it.h <= N) ells.insert(it.h);
  }

  const long long arm = std::max<long long>(1, to_ll(rceil(eps * eps * N)));
  for (long long ell : ells) {
    LInstance li = long_item_l_instance(inst, {N, arm, arm}, ell);
    LPackResult lr;
    try {
      lr = lpack_ptas(li, eps);
    } catch (const std::exception&) {
      continue;
    }
    std::vector<Item> shorts;
    for (const auto& it : inst.items)
      if (it.w <= ell && it.h <= ell) shorts.push_back(it);
    Instance sub = sub_instance(inst, shorts);
    const std::string name = "ell=" + std::to_string(ell);
    consider(rep, inst, name, lr.packing);
    consider_container_layouts(rep, inst, sub, {arm, arm, N - arm, N - arm}, eps, name,
                               &lr.packing);
  }

  // Degenerate L: pure container packing of everything.
  consider_container_layouts(rep, inst, inst, {0, 0, N, N}, eps, "ell=N");

  rep.best.canonicalize();
  return rep;
}

SolveReport solve_rotations(const Instance& inst, const Rational& eps) {
  if (!inst.rotations) throw std::invalid_argument("solve_rotations: rotations required");
  if (eps <= 0 || eps > Rational(1, 13))
    throw std::invalid_argument("solve_rotations: eps must be in (0, 1/13]");
  const long long N = inst.N;
  SolveReport rep;
  rep.best.region = {0, 0, N, N};
  if (auto single = best_single_item(inst)) consider(rep, inst, "single", *single);

  // (a) Rotation-aware container packing of the full knapsack.
  consider_container_layouts(rep, inst, inst, {0, 0, N, N}, eps, "containers");

  // (c) Massive item: trivial seed packing around it, then the three-way split.
  const Item* massive = nullptr;
  for (const auto& it : inst.items)
    if (Rational(it.w) >= (1 - eps) * N && Rational(it.h) >= (1 - eps) * N && it.w <= N &&
        it.h <= N)
      if (!massive || it.p > massive->p) massive = &it;
  if (massive) {
    Packing seed;
    seed.region = {0, 0, N, N};
    seed.placements.push_back({massive->id, 0, 0, false});
    // Fill the top margin with flat-rotated items, most profitable first.
    const long long band = N - massive->h;
    long long cursor = 0;
    std::vector<const Item*> rest;
    for (const auto& it : inst.items)
      if (it.id != massive->id) rest.push_back(&it);
    std::sort(rest.begin(), rest.end(), [](const Item* a, const Item* b) {
      return a->p != b->p ? a->p > b->p : a->id < b->id;
    });
    for (const Item* it : rest) {
      const bool plain = it->h <= band && it->w <= N;
      const bool rot = it->w <= band && it->h <= N;
      if (!plain && !rot) continue;
      const long long fw = plain ? it->w : it->h;
      if (cursor + fw > N) continue;
      seed.placements.push_back({it->id, cursor, massive->h, !plain});
      cursor += fw;
    }
    consider(rep, inst, "massive-seed", seed);
    try {
      MassiveSplitResult ms = massive_item_split(inst, seed, eps);
      consider(rep, inst, "massive-split", ms.packing);
    } catch (const std::exception&) {
    }
  }

  // (b) Contract the best packing so far and fill the freed strip with
  // leftover thin items.
  if (!rep.best.placements.empty() && !massive) {
    try {
      ContractionResult rc = resource_contraction_weighted(inst, rep.best, eps);
      const long long strip_w = N - rc.packing.region.w;
      Packing cand = rc.packing;
      cand.region = {0, 0, N, N};
      std::set<int> used;
      for (const auto& pl : cand.placements) used.insert(pl.item_id);
      std::vector<const Item*> rest;
      for (const auto& it : inst.items)
        if (!used.count(it.id)) rest.push_back(&it);
      std::sort(rest.begin(), rest.end(), [](const Item* a, const Item* b) {
        return a->p != b->p ? a->p > b->p : a->id < b->id;
      });
      long long cursor = 0;
      for (const Item* it : rest) {
        const bool plain = it->w <= strip_w && it->h <= N;
        const bool rot = it->h <= strip_w && it->w <= N;
        if (!plain && !rot) continue;
        const long long fh = plain ? it->h : it->w;
        if (cursor + fh > N) continue;
        cand.placements.push_back({it->id, N - strip_w, cursor, !plain});
        cursor += fh;
      }
      cand.canonicalize();
      consider(rep, inst, "contracted+strip", cand);
    } catch (const std::exception&) {
    }
  }

  rep.best.canonicalize();
  return rep;
}

}  // namespace gk
