#include "gkpack/longring.hpp"

#include <algorithm>
#include <map>

#include "gkpack/validate.hpp"

namespace gk {

namespace {

struct PRect {
  Placement pl;  // original placement (rotation flag preserved)
  RectI r;       // current footprint
  bool wide = false;
};

bool x_overlap(const RectI& a, const RectI& b) { return a.x < b.right() && b.x < a.right(); }
bool y_overlap(const RectI& a, const RectI& b) { return a.y < b.top() && b.y < a.top(); }

}  // namespace

RingPacking ring_shift(const Instance& inst, const Packing& packing) {
  ValidationReport rep = validate_packing(inst, packing);
  if (!rep.ok) throw std::invalid_argument("ring_shift: input packing invalid: " + rep.violations[0]);
  const long long N = inst.N;

  std::vector<PRect> items;
  for (const auto& pl : packing.placements) {
    const Item* it = inst.find(pl.item_id);
    PRect pr{pl, footprint(*it, pl), false};
    if (2 * pr.r.w > N)
      pr.wide = true;
    else if (2 * pr.r.h > N)
      pr.wide = false;
    else
      throw std::invalid_argument("ring_shift: item " + std::to_string(pl.item_id) +
                                  " has no side > N/2");
    items.push_back(pr);
  }
  const size_t n = items.size();

  // Phase 1: wide items move vertically. Wide items straddle x = N/2, so they
  // are pairwise x-overlapping, hence totally ordered by y, and shifting
  // preserves that order. A wide item with a tall item above it (overlapping
  // in x) must go down, one with a tall item below must go up; both at once is
  // geometrically impossible, and the forced-down items precede the forced-up
  // items in the y-order. Unconstrained items in between may go either way; we
  // send them down. Each group then stacks contiguously against its side,
  // which only ever moves an item further outward.
  std::vector<size_t> wide_idx, tall_idx;
  for (size_t i = 0; i < n; ++i) (items[i].wide ? wide_idx : tall_idx).push_back(i);
  std::sort(wide_idx.begin(), wide_idx.end(),
            [&](size_t a, size_t b) { return items[a].r.y < items[b].r.y; });
  std::sort(tall_idx.begin(), tall_idx.end(),
            [&](size_t a, size_t b) { return items[a].r.x < items[b].r.x; });

  size_t first_up = wide_idx.size();
  for (size_t k = 0; k < wide_idx.size(); ++k) {
    const auto& it = items[wide_idx[k]];
    bool tall_above = false, tall_below = false;
    for (size_t t : tall_idx) {
      if (!x_overlap(it.r, items[t].r)) continue;
      (items[t].r.y >= it.r.top() ? tall_above : tall_below) = true;
    }
    if (tall_above && tall_below)
      throw std::logic_error("ring_shift: wide item wedged between tall items");
    if (tall_below) {
      first_up = std::min(first_up, k);
    } else if (tall_above && k >= first_up) {
      throw std::logic_error("ring_shift: forced directions out of order");
    }
  }
  long long level = 0;
  for (size_t k = 0; k < first_up; ++k) {
    items[wide_idx[k]].r.y = level;
    level += items[wide_idx[k]].r.h;
  }
  level = N;
  for (size_t k = wide_idx.size(); k-- > first_up;) {
    level -= items[wide_idx[k]].r.h;
    items[wide_idx[k]].r.y = level;
  }

  // Phase 2: tall items move horizontally (symmetric, against the new wide
  // positions).
  size_t first_right = tall_idx.size();
  for (size_t k = 0; k < tall_idx.size(); ++k) {
    const auto& it = items[tall_idx[k]];
    bool wide_left = false, wide_right = false;
    for (size_t w : wide_idx) {
      if (!y_overlap(it.r, items[w].r)) continue;
      (items[w].r.x >= it.r.right() ? wide_right : wide_left) = true;
    }
    if (wide_left && wide_right)
      throw std::logic_error("ring_shift: tall item wedged between wide items");
    if (wide_left) {
      first_right = std::min(first_right, k);
    } else if (wide_right && k >= first_right) {
      throw std::logic_error("ring_shift: forced directions out of order");
    }
  }
  level = 0;
  for (size_t k = 0; k < first_right; ++k) {
    items[tall_idx[k]].r.x = level;
    level += items[tall_idx[k]].r.w;
  }
  level = N;
  for (size_t k = tall_idx.size(); k-- > first_right;) {
    level -= items[tall_idx[k]].r.w;
    items[tall_idx[k]].r.x = level;
  }

  // Defensive check: the shifted configuration must still be disjoint.
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (interiors_overlap(items[i].r, items[j].r))
        throw std::logic_error("ring_shift: shifting produced an overlap");

  // Extract the four contiguous chains.
  RingPacking ring;
  ring.N = N;
  std::vector<bool> used(n, false);
  auto chain = [&](bool wide, bool from_low, std::vector<Placement>& out) {
    long long level = from_low ? 0 : N;
    for (;;) {
      bool found = false;
      for (size_t i = 0; i < n; ++i) {
        if (used[i] || items[i].wide != wide) continue;
        const RectI& r = items[i].r;
        const long long edge_low = wide ? r.y : r.x;
        const long long edge_high = wide ? r.top() : r.right();
        if ((from_low && edge_low == level) || (!from_low && edge_high == level)) {
          items[i].pl.x = r.x;
          items[i].pl.y = r.y;
          out.push_back(items[i].pl);
          used[i] = true;
          level = from_low ? edge_high : edge_low;
          found = true;
          break;
        }
      }
      if (!found) break;
    }
  };
  chain(true, true, ring.bottom);
  chain(true, false, ring.top);
  chain(false, true, ring.left);
  chain(false, false, ring.right);
  for (size_t i = 0; i < n; ++i)
    if (!used[i]) throw std::logic_error("ring_shift: item not flush after convergence");

  // Best-effort sorting of each stack outward-in by the long dimension,
  // keeping every item's cross coordinate: applied only when the permuted
  // arrangement stays feasible (it is not always achievable).
  auto try_sort = [&](std::vector<Placement>& stack, bool wide, bool from_low) {
    if (stack.size() < 2) return;
    std::vector<std::pair<Placement, RectI>> cur;
    for (const auto& pl : stack) cur.push_back({pl, footprint(*inst.find(pl.item_id), pl)});
    auto sorted = cur;
    std::stable_sort(sorted.begin(), sorted.end(), [&](const auto& a, const auto& b) {
      return wide ? a.second.w > b.second.w : a.second.h > b.second.h;
    });
    long long level = from_low ? 0 : N;
    for (auto& [pl, r] : sorted) {
      if (wide) {
        r.y = from_low ? level : level - r.h;
        level = from_low ? r.top() : r.y;
      } else {
        r.x = from_low ? level : level - r.w;
        level = from_low ? r.right() : r.x;
      }
    }
    // Feasible against everything outside this stack?
    for (const auto& [pl, r] : sorted)
      for (const auto& o : items) {
        bool in_stack = false;
        for (const auto& c : cur)
          if (c.first.item_id == o.pl.item_id) in_stack = true;
        if (in_stack) continue;
        if (interiors_overlap(r, o.r)) return;  // keep the original order
      }
    stack.clear();
    for (auto& [pl, r] : sorted) {
      pl.x = r.x;
      pl.y = r.y;
      stack.push_back(pl);
    }
  };
  try_sort(ring.bottom, true, true);
  try_sort(ring.top, true, false);
  try_sort(ring.left, false, true);
  try_sort(ring.right, false, false);
  return ring;
}

long long ring_profit(const Instance& inst, const RingPacking& ring) {
  long long p = 0;
  for (const auto* stack : {&ring.left, &ring.right, &ring.top, &ring.bottom})
    for (const auto& pl : *stack) p += inst.find(pl.item_id)->p;
  return p;
}

namespace {

struct CoreRect {
  int id = 0;
  RectI r;
};

// Transform helpers applied uniformly to footprints; chains keep their
// outward-in order because distance to the owning side is preserved.
RectI flip_y(const RectI& r, long long N) { return {r.x, N - r.y - r.h, r.w, r.h}; }
RectI mirror_x(const RectI& r, long long N) { return {N - r.x - r.w, r.y, r.w, r.h}; }
RectI transpose(const RectI& r) { return {r.y, r.x, r.h, r.w}; }

}  // namespace

RingToLResult ring_to_boundary_l(const Instance& inst, const RingPacking& ring) {
  const long long N = ring.N;
  auto stack_profit = [&](const std::vector<Placement>& s) {
    long long p = 0;
    for (const auto& pl : s) p += inst.find(pl.item_id)->p;
    return p;
  };
  // Remove the cheapest stack; ties prefer top, then right, then bottom, left.
  const std::vector<const std::vector<Placement>*> order = {&ring.top, &ring.right, &ring.bottom,
                                                            &ring.left};
  int removed = 0;
  long long best = stack_profit(*order[0]);
  for (int k = 1; k < 4; ++k) {
    long long p = stack_profit(*order[k]);
    if (p < best) {
      best = p;
      removed = k;
    }
  }

  // Map the three surviving stacks onto a canonical orientation in which the
  // removed stack was the top one: survivors become a bottom chain of wide
  // items and left/right chains of tall items.
  auto conv = [&](const std::vector<Placement>& s, std::vector<CoreRect>& out) {
    for (const auto& pl : s) {
      RectI r = footprint(*inst.find(pl.item_id), pl);
      switch (removed) {
        case 0: break;                                        // top removed
        case 1: r = transpose(r); break;                      // right removed
        case 2: r = flip_y(r, N); break;                      // bottom removed
        case 3: r = transpose(mirror_x(r, N)); break;         // left removed
      }
      out.push_back({pl.item_id, r});
    }
  };
  std::vector<CoreRect> bottom, left, right;
  switch (removed) {
    case 0:
      conv(ring.bottom, bottom), conv(ring.left, left), conv(ring.right, right);
      break;
    case 1:
      conv(ring.left, bottom), conv(ring.bottom, left), conv(ring.top, right);
      break;
    case 2:
      conv(ring.top, bottom), conv(ring.left, left), conv(ring.right, right);
      break;
    case 3:
      conv(ring.right, bottom), conv(ring.bottom, left), conv(ring.top, right);
      break;
  }

  // Iteratively peel lonely boundary items across guillotine cuts. The
  // bottommost/leftmost cases freeze the item; the rightmost case shifts all
  // live items sideways and reinserts the item as the new leftmost one.
  std::vector<CoreRect> frozen;
  long long x0 = 0, y0 = 0;
  size_t guard = 2 * (bottom.size() + left.size() + right.size()) + 4;
  while (!bottom.empty() || !left.empty() || !right.empty()) {
    if (guard-- == 0) throw std::logic_error("ring_to_boundary_l: peeling did not terminate");
    if (!bottom.empty()) {
      const RectI jb = bottom.front().r;
      bool lonely = true;
      for (const auto* c : {&bottom, &left, &right})
        for (const auto& cr : *c)
          if (&cr != &bottom.front() && cr.r.y < jb.top()) lonely = false;
      if (lonely) {
        if (jb.y != y0) throw std::logic_error("ring_to_boundary_l: bottom chain not contiguous");
        frozen.push_back(bottom.front());
        bottom.erase(bottom.begin());
        y0 = jb.top();
        continue;
      }
    }
    if (!left.empty()) {
      const RectI jl = left.front().r;
      bool lonely = true;
      for (const auto* c : {&bottom, &left, &right})
        for (const auto& cr : *c)
          if (&cr != &left.front() && cr.r.x < jl.right()) lonely = false;
      if (lonely) {
        if (jl.x != x0) throw std::logic_error("ring_to_boundary_l: left chain not contiguous");
        frozen.push_back(left.front());
        left.erase(left.begin());
        x0 = jl.right();
        continue;
      }
    }
    if (!right.empty()) {
      CoreRect jr = right.front();
      bool lonely = true;
      for (const auto* c : {&bottom, &left, &right})
        for (const auto& cr : *c)
          if (&cr != &right.front() && cr.r.right() > jr.r.x) lonely = false;
      if (lonely) {
        right.erase(right.begin());
        for (auto* c : {&bottom, &left, &right})
          for (auto& cr : *c) cr.r.x += jr.r.w;
        jr.r.x = x0;
        left.insert(left.begin(), jr);
        continue;
      }
    }
    throw std::logic_error("ring_to_boundary_l: no lonely boundary item found");
  }

  // Internal consistency of the constructed packing: pairwise disjoint and
  // inside the boundary L spanned by the kept extents.
  long long h_arm = 0, w_arm = 0;
  for (const auto& cr : frozen) {
    if (2 * cr.r.w > N)
      h_arm += cr.r.h;
    else
      w_arm += cr.r.w;
  }
  for (size_t i = 0; i < frozen.size(); ++i) {
    const RectI& r = frozen[i].r;
    const bool in_bottom_arm = r.top() <= h_arm && r.x >= 0 && r.right() <= N && r.y >= 0;
    const bool in_left_arm = r.right() <= w_arm && r.y >= 0 && r.top() <= N && r.x >= 0;
    if (!in_bottom_arm && !in_left_arm)
      throw std::logic_error("ring_to_boundary_l: frozen item escapes the L region");
    for (size_t j = i + 1; j < frozen.size(); ++j)
      if (interiors_overlap(r, frozen[j].r))
        throw std::logic_error("ring_to_boundary_l: frozen items overlap");
  }

  // Express the result in normal form in the original orientation.
  RingToLResult res;
  std::vector<Item> kept_hor, kept_ver;
  std::map<int, bool> rot;
  for (const auto* stack : {&ring.left, &ring.right, &ring.top, &ring.bottom})
    for (const auto& pl : *stack) rot[pl.item_id] = pl.rotated;
  for (const auto& cr : frozen) {
    const Item* it = inst.find(cr.id);
    RectI f = footprint(*it, Placement{cr.id, 0, 0, rot[cr.id]});
    Item eff{cr.id, f.w, f.h, it->p};
    if (2 * eff.w > N)
      kept_hor.push_back(eff);
    else
      kept_ver.push_back(eff);
    res.kept_profit += it->p;
  }
  res.shape.N = N;
  for (const auto& it : kept_hor) res.shape.h_l += it.h;
  for (const auto& it : kept_ver) res.shape.w_l += it.w;
  auto pk = normalize_l_packing(kept_hor, kept_ver, res.shape);
  if (!pk) throw std::logic_error("ring_to_boundary_l: normal form infeasible");
  res.packing = *pk;
  for (auto& pl : res.packing.placements) pl.rotated = rot[pl.item_id];
  return res;
}

}  // namespace gk
