#include "gkpack/steinberg.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "gkpack/shelf.hpp"
#include "gkpack/validate.hpp"

namespace gk {

namespace {

struct RItem {
  int id;
  Rational w, h, a;
};

struct RPlace {
  int id;
  Rational x, y;
};

Rational area_sum(const std::vector<RItem>& L) {
  Rational s = 0;
  for (const auto& i : L) s += i.a;
  return s;
}

Rational max_w(const std::vector<RItem>& L) {
  Rational m = 0;
  for (const auto& i : L) m = std::max(m, i.w);
  return m;
}

Rational max_h(const std::vector<RItem>& L) {
  Rational m = 0;
  for (const auto& i : L) m = std::max(m, i.h);
  return m;
}

// The theorem's feasibility condition for a u x v region.
bool condition_holds(const std::vector<RItem>& L, const Rational& u, const Rational& v) {
  if (L.empty()) return true;
  Rational wm = max_w(L), hm = max_h(L);
  if (wm > u || hm > v) return false;
  Rational cw = std::max(Rational(0), Rational(2 * wm - u));
  Rational ch = std::max(Rational(0), Rational(2 * hm - v));
  return 2 * area_sum(L) <= u * v - cw * ch;
}

void sort_by_width_desc(std::vector<RItem>& L) {
  std::sort(L.begin(), L.end(), [](const RItem& a, const RItem& b) {
    if (a.w != b.w) return a.w > b.w;
    if (a.h != b.h) return a.h > b.h;
    return a.id < b.id;
  });
}

std::vector<RItem> transpose_items(const std::vector<RItem>& L) {
  std::vector<RItem> t = L;
  for (auto& i : t) std::swap(i.w, i.h);
  return t;
}

// Forward declaration: places L into the local region [0,u] x [0,v].
void solve(std::vector<RItem> L, const Rational& u, const Rational& v, std::vector<RPlace>& out);

void emit(std::vector<RPlace>& out, const std::vector<RPlace>& sub, const Rational& ox,
          const Rational& oy) {
  for (const auto& p : sub) out.push_back({p.id, p.x + ox, p.y + oy});
}

void emit_transposed(std::vector<RPlace>& out, const std::vector<RPlace>& sub) {
  for (const auto& p : sub) out.push_back({p.id, p.y, p.x});
}

// Reduction for w_max >= u/2: stack all wide items bottom-left by
// non-increasing width (height h0); items of height > v - h0 go flush right,
// top-aligned, taller further right; the remainder recurses into the
// rectangle above the wide stack and left of the tall column block.
void proc_wide(std::vector<RItem> L, const Rational& u, const Rational& v,
               std::vector<RPlace>& out) {
  sort_by_width_desc(L);
  std::vector<RItem> wide, rest;
  for (const auto& i : L) (2 * i.w >= u ? wide : rest).push_back(i);

  Rational h0 = 0;
  for (const auto& i : wide) {
    out.push_back({i.id, 0, h0});
    h0 += i.h;
  }

  std::vector<RItem> tall, residue;
  for (const auto& i : rest) (i.h > v - h0 ? tall : residue).push_back(i);
  std::sort(tall.begin(), tall.end(), [](const RItem& a, const RItem& b) {
    if (a.h != b.h) return a.h < b.h;  // tallest placed last = rightmost
    return a.id < b.id;
  });
  Rational sigma = 0;
  for (const auto& i : tall) sigma += i.w;
  Rational x = u - sigma;
  for (const auto& i : tall) {
    out.push_back({i.id, x, v - i.h});
    x += i.w;
  }

  std::vector<RPlace> sub;
  solve(std::move(residue), u - sigma, v - h0, sub);
  emit(out, sub, 0, h0);
}

// Vertical split at x = u1: prefix (widest items) to the left, suffix to the
// right. Returns true on success. Assumes all widths < u/2, heights < v/2.
bool try_split(const std::vector<RItem>& sorted, const Rational& u, const Rational& v,
               std::vector<RPlace>& out) {
  const size_t n = sorted.size();
  if (n < 2) return false;
  Rational S = area_sum(sorted);
  Rational w1 = sorted.front().w;
  Rational prefix = 0;
  for (size_t i = 0; i + 1 < n; ++i) {
    prefix += sorted[i].a;
    Rational u1 = std::max(w1, Rational(2 * prefix / v));
    if (u1 > u - sorted[i + 1].w) continue;
    if (2 * (S - prefix) > (u - u1) * v) continue;
    std::vector<RItem> left(sorted.begin(), sorted.begin() + i + 1);
    std::vector<RItem> right(sorted.begin() + i + 1, sorted.end());
    std::vector<RPlace> a, b;
    solve(std::move(left), u1, v, a);
    solve(std::move(right), u - u1, v, b);
    emit(out, a, 0, 0);
    emit(out, b, u1, 0);
    return true;
  }
  return false;
}

// Stack a prefix of the width-sorted items as one physical column of width w1
// when its height fits and the remainder's area fits beside it.
bool try_prefix_column(const std::vector<RItem>& sorted, const Rational& u, const Rational& v,
                       std::vector<RPlace>& out) {
  const size_t n = sorted.size();
  if (n < 2) return false;
  Rational S = area_sum(sorted);
  Rational w1 = sorted.front().w;
  Rational height = 0, prefix = 0;
  for (size_t i = 0; i + 1 < n; ++i) {
    height += sorted[i].h;
    if (height > v) return false;
    prefix += sorted[i].a;
    if (2 * (S - prefix) > (u - w1) * v) continue;
    Rational y = 0;
    for (size_t k = 0; k <= i; ++k) {
      out.push_back({sorted[k].id, 0, y});
      y += sorted[k].h;
    }
    std::vector<RItem> right(sorted.begin() + i + 1, sorted.end());
    std::vector<RPlace> b;
    solve(std::move(right), u - w1, v, b);
    emit(out, b, w1, 0);
    return true;
  }
  return false;
}

// Stack two items as a column of width max(w_p, w_q) at the left edge and
// recurse on everything else to the right. Picks the feasible pair with the
// largest combined area.
bool try_pair_column(const std::vector<RItem>& L, const Rational& u, const Rational& v,
                     std::vector<RPlace>& out) {
  const size_t n = L.size();
  if (n < 3) return false;
  Rational S = area_sum(L);
  std::optional<std::pair<size_t, size_t>> best;
  Rational best_area = -1;
  for (size_t p = 0; p < n; ++p)
    for (size_t q = p + 1; q < n; ++q) {
      if (L[p].h + L[q].h > v) continue;
      Rational wstar = std::max(L[p].w, L[q].w);
      if (2 * (S - L[p].a - L[q].a) > (u - wstar) * v) continue;
      Rational pa = L[p].a + L[q].a;
      if (pa > best_area) {
        best_area = pa;
        best = {p, q};
      }
    }
  if (!best) return false;
  auto [p, q] = *best;
  Rational wstar = std::max(L[p].w, L[q].w);
  out.push_back({L[p].id, 0, 0});
  out.push_back({L[q].id, 0, L[p].h});
  std::vector<RItem> rest;
  for (size_t i = 0; i < n; ++i)
    if (i != p && i != q) rest.push_back(L[i]);
  std::vector<RPlace> b;
  solve(std::move(rest), u - wstar, v, b);
  emit(out, b, wstar, 0);
  return true;
}

// Last resort: shelf-pack in rational space. Returns true if everything fits.
bool try_shelves(const std::vector<RItem>& L, const Rational& u, const Rational& v,
                 std::vector<RPlace>& out) {
  std::vector<RItem> order = L;
  std::sort(order.begin(), order.end(), [](const RItem& a, const RItem& b) {
    if (a.h != b.h) return a.h > b.h;
    if (a.w != b.w) return a.w > b.w;
    return a.id < b.id;
  });
  std::vector<RPlace> tmp;
  Rational shelf_y = 0, shelf_h = 0, x = 0;
  bool open = false;
  for (const auto& i : order) {
    if (!open || x + i.w > u) {
      Rational ny = open ? shelf_y + shelf_h : Rational(0);
      if (ny + i.h > v) return false;
      shelf_y = ny;
      shelf_h = i.h;
      x = 0;
      open = true;
    }
    tmp.push_back({i.id, x, shelf_y});
    x += i.w;
  }
  emit(out, tmp, 0, 0);
  return true;
}

void solve(std::vector<RItem> L, const Rational& u, const Rational& v,
           std::vector<RPlace>& out) {
  if (L.empty()) return;
  if (L.size() == 1) {
    out.push_back({L[0].id, 0, 0});
    return;
  }
  if (2 * max_w(L) >= u) {
    proc_wide(std::move(L), u, v, out);
    return;
  }
  if (2 * max_h(L) >= v) {
    std::vector<RPlace> sub;
    proc_wide(transpose_items(L), v, u, sub);
    emit_transposed(out, sub);
    return;
  }

  std::vector<RItem> by_w = L;
  sort_by_width_desc(by_w);
  if (try_split(by_w, u, v, out)) return;

  std::vector<RItem> by_h = transpose_items(L);
  sort_by_width_desc(by_h);
  {
    std::vector<RPlace> sub;
    if (try_split(by_h, v, u, sub)) {
      emit_transposed(out, sub);
      return;
    }
  }
  if (try_prefix_column(by_w, u, v, out)) return;
  {
    std::vector<RPlace> sub;
    if (try_prefix_column(by_h, v, u, sub)) {
      emit_transposed(out, sub);
      return;
    }
  }
  if (try_pair_column(L, u, v, out)) return;
  {
    std::vector<RPlace> sub;
    if (try_pair_column(transpose_items(L), v, u, sub)) {
      emit_transposed(out, sub);
      return;
    }
  }
  if (try_shelves(L, u, v, out)) return;
  throw resource_error("steinberg_pack: no applicable reduction for a subproblem of size " +
                       std::to_string(L.size()));
}

}  // namespace

bool steinberg_condition(const std::vector<Item>& items, long long box_w, long long box_h) {
  for (const auto& it : items)
    if (it.w > box_w || it.h > box_h) return false;
  return steinberg_slack(items, box_w, box_h) >= 0;
}

long long steinberg_slack(const std::vector<Item>& items, long long box_w, long long box_h) {
  long long wm = 0, hm = 0, area2 = 0;
  for (const auto& it : items) {
    wm = std::max(wm, it.w);
    hm = std::max(hm, it.h);
    area2 += 2 * it.w * it.h;
  }
  long long cw = std::max(0LL, 2 * wm - box_w);
  long long ch = std::max(0LL, 2 * hm - box_h);
  return box_w * box_h - cw * ch - area2;
}

void compact_left_down(const Instance& inst, Packing& packing) {
  auto rect_of = [&](const Placement& pl) {
    const Item* it = inst.find(pl.item_id);
    return footprint(*it, pl);
  };
  bool changed = true;
  int guard = 0;
  while (changed && guard++ < 10000) {
    changed = false;
    // Push left, processing in ascending x so blockers settle first.
    std::sort(packing.placements.begin(), packing.placements.end(),
              [&](const Placement& a, const Placement& b) {
                if (a.x != b.x) return a.x < b.x;
                if (a.y != b.y) return a.y < b.y;
                return a.item_id < b.item_id;
              });
    for (auto& pl : packing.placements) {
      RectI r = rect_of(pl);
      long long nx = packing.region.x;
      for (const auto& other : packing.placements) {
        if (other.item_id == pl.item_id) continue;
        RectI o = rect_of(other);
        if (o.y < r.top() && r.y < o.top() && o.right() <= r.x)
          nx = std::max(nx, o.right());
      }
      if (nx < pl.x) {
        pl.x = nx;
        changed = true;
      }
    }
    // Push down symmetrically.
    std::sort(packing.placements.begin(), packing.placements.end(),
              [&](const Placement& a, const Placement& b) {
                if (a.y != b.y) return a.y < b.y;
                if (a.x != b.x) return a.x < b.x;
                return a.item_id < b.item_id;
              });
    for (auto& pl : packing.placements) {
      RectI r = rect_of(pl);
      long long ny = packing.region.y;
      for (const auto& other : packing.placements) {
        if (other.item_id == pl.item_id) continue;
        RectI o = rect_of(other);
        if (o.x < r.right() && r.x < o.right() && o.top() <= r.y)
          ny = std::max(ny, o.top());
      }
      if (ny < pl.y) {
        pl.y = ny;
        changed = true;
      }
    }
  }
  packing.canonicalize();
}

namespace {

// Left-down compaction in exact rational space. At the fixpoint every
// coordinate is a sum of item side lengths, hence an integer.
void compact_rational(std::vector<RPlace>& placed, const std::vector<Item>& items) {
  std::map<int, std::pair<Rational, Rational>> dims;
  for (const auto& it : items) dims[it.id] = {Rational(it.w), Rational(it.h)};
  auto wd = [&](const RPlace& p) { return dims.at(p.id).first; };
  auto ht = [&](const RPlace& p) { return dims.at(p.id).second; };

  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(placed.begin(), placed.end(), [](const RPlace& a, const RPlace& b) {
      if (a.x != b.x) return a.x < b.x;
      if (a.y != b.y) return a.y < b.y;
      return a.id < b.id;
    });
    for (auto& p : placed) {
      Rational nx = 0;
      for (const auto& o : placed) {
        if (o.id == p.id) continue;
        if (o.y < p.y + ht(p) && p.y < o.y + ht(o) && o.x + wd(o) <= p.x)
          nx = std::max(nx, o.x + wd(o));
      }
      if (nx < p.x) {
        p.x = nx;
        changed = true;
      }
    }
    std::sort(placed.begin(), placed.end(), [](const RPlace& a, const RPlace& b) {
      if (a.y != b.y) return a.y < b.y;
      if (a.x != b.x) return a.x < b.x;
      return a.id < b.id;
    });
    for (auto& p : placed) {
      Rational ny = 0;
      for (const auto& o : placed) {
        if (o.id == p.id) continue;
        if (o.x < p.x + wd(p) && p.x < o.x + wd(o) && o.y + ht(o) <= p.y)
          ny = std::max(ny, o.y + ht(o));
      }
      if (ny < p.y) {
        p.y = ny;
        changed = true;
      }
    }
  }
}

}  // namespace

Packing steinberg_pack(const std::vector<Item>& items, long long box_w, long long box_h) {
  if (!steinberg_condition(items, box_w, box_h))
    throw std::invalid_argument("steinberg_pack: condition violated, slack " +
                                std::to_string(steinberg_slack(items, box_w, box_h)));
  std::vector<RItem> L;
  for (const auto& it : items) L.push_back({it.id, Rational(it.w), Rational(it.h), Rational(it.w) * it.h});
  std::vector<RPlace> placed;
  solve(std::move(L), Rational(box_w), Rational(box_h), placed);
  compact_rational(placed, items);

  Packing packing;
  packing.region = {0, 0, box_w, box_h};
  for (const auto& p : placed) {
    if (denominator(p.x) != 1 || denominator(p.y) != 1)
      throw resource_error("steinberg_pack: compaction failed to reach the integer grid");
    packing.placements.push_back({p.id, to_ll(numerator(p.x)), to_ll(numerator(p.y)), false});
  }
  packing.canonicalize();
  return packing;
}

Packing small_stein_pack(const std::vector<Item>& items, const Rational& alpha,
                         const Rational& beta, const Rational& eps_large, long long N) {
  const Rational half(1, 2);
  const Rational side_cap = (half + 2 * eps_large) * N;
  Rational area = 0;
  for (const auto& it : items) {
    if (Rational(it.w) > side_cap || Rational(it.h) > side_cap)
      throw std::invalid_argument("small_stein_pack: item side exceeds (1/2+2*eps_large)*N");
    area += Rational(it.w) * it.h;
  }
  if (alpha > half - 2 * eps_large || beta > half - 2 * eps_large)
    throw std::invalid_argument("small_stein_pack: alpha/beta exceed 1/2-2*eps_large");
  Rational budget = (half - (alpha + beta) * (half + 2 * eps_large) - 8 * eps_large * eps_large) *
                    Rational(N) * N;
  if (area > budget)
    throw std::invalid_argument("small_stein_pack: area budget exceeded");
  long long bw = to_ll(rfloor((1 - alpha) * N));
  long long bh = to_ll(rfloor((1 - beta) * N));
  return steinberg_pack(items, bw, bh);
}

std::vector<Item> area_prefix_select(const std::vector<Item>& items, long long budget) {
  if (budget < 0) throw std::invalid_argument("area_prefix_select: negative budget");
  std::vector<Item> order = items;
  std::sort(order.begin(), order.end(), [](const Item& a, const Item& b) {
    long long aa = a.w * a.h, ab = b.w * b.h;
    if (aa != ab) return aa < ab;
    return a.id < b.id;
  });
  std::vector<Item> picked;
  long long used = 0;
  for (const auto& it : order) {
    long long a = it.w * it.h;
    if (used + a > budget) break;
    used += a;
    picked.push_back(it);
  }
  return picked;
}

}  // namespace gk
