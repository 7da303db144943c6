#include "gkpack/containers.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "gkpack/gap.hpp"
#include "gkpack/shelf.hpp"
#include "gkpack/validate.hpp"

namespace gk {

using nlohmann::json;

void check_layout(const ContainerLayout& layout, const RectI& region) {
  for (size_t i = 0; i < layout.containers.size(); ++i) {
    const RectI& r = layout.containers[i].rect;
    if (r.w < 0 || r.h < 0) throw validation_error("layout: container with negative size");
    if (!contains(region, r)) throw validation_error("layout: container outside the region");
    for (size_t j = i + 1; j < layout.containers.size(); ++j)
      if (interiors_overlap(r, layout.containers[j].rect))
        throw validation_error("layout: containers overlap");
  }
}

ContainerLayout parse_layout(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("layout: invalid JSON: ") + e.what());
  }
  if (!j.is_array()) throw parse_error("layout: expected a JSON array");
  ContainerLayout layout;
  for (const auto& e : j) {
    if (!e.is_object()) throw parse_error("layout: entries must be objects");
    Container c;
    const std::string kind = e.value("kind", "");
    if (kind == "h")
      c.kind = ContainerKind::Horizontal;
    else if (kind == "v")
      c.kind = ContainerKind::Vertical;
    else if (kind == "a")
      c.kind = ContainerKind::Area;
    else
      throw parse_error("layout: kind must be \"h\", \"v\" or \"a\"");
    for (const char* f : {"x", "y", "w", "h"})
      if (!e.contains(f) || !e[f].is_number_integer())
        throw parse_error(std::string("layout: missing integer field ") + f);
    c.rect = {e["x"].get<long long>(), e["y"].get<long long>(), e["w"].get<long long>(),
              e["h"].get<long long>()};
    layout.containers.push_back(c);
  }
  return layout;
}

std::string serialize_layout(const ContainerLayout& layout) {
  json arr = json::array();
  for (const auto& c : layout.containers) {
    const char* kind = c.kind == ContainerKind::Horizontal ? "h"
                       : c.kind == ContainerKind::Vertical ? "v"
                                                           : "a";
    arr.push_back(json{{"kind", kind},
                       {"x", c.rect.x},
                       {"y", c.rect.y},
                       {"w", c.rect.w},
                       {"h", c.rect.h}});
  }
  return arr.dump(2) + "\n";
}

namespace {

std::vector<long long> pk_set(std::vector<long long> base, int k, long long n, size_t cap) {
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  // Sums of at most k base values (with repetition).
  std::set<long long> sums{0};
  for (int step = 0; step < k; ++step) {
    std::set<long long> nxt = sums;
    for (long long s : sums)
      for (long long b : base) nxt.insert(s + b);
    if (nxt.size() > cap) throw resource_error("candidate_sizes: cap exceeded");
    if (nxt.size() == sums.size()) break;
    sums.swap(nxt);
  }
  std::set<long long> out;
  for (long long s : sums)
    for (long long b : base)
      for (long long i = 0; i <= n; ++i) {
        out.insert(s + i * b);
        if (out.size() > cap) throw resource_error("candidate_sizes: cap exceeded");
      }
  if (base.empty()) out = sums;
  return {out.begin(), out.end()};
}

}  // namespace

CandidateSizes candidate_sizes(const std::vector<Item>& items, int k, size_t cap) {
  if (k < 0) throw std::invalid_argument("candidate_sizes: k must be >= 0");
  std::vector<long long> ws, hs;
  for (const auto& it : items) {
    ws.push_back(it.w);
    hs.push_back(it.h);
  }
  const long long n = static_cast<long long>(items.size());
  CandidateSizes cs;
  cs.widths = pk_set(ws, k, n, cap);
  cs.heights = pk_set(hs, k, n, cap);
  return cs;
}

ContainerPackResult pack_into_containers(const Instance& inst, const ContainerLayout& layout,
                                         const Rational& eps) {
  if (eps <= 0 || eps >= Rational(1, 3))
    throw std::invalid_argument("pack_into_containers: eps must be in (0, 1/3)");
  const RectI region{0, 0, inst.N, inst.N};
  check_layout(layout, region);
  const int n = static_cast<int>(inst.items.size());
  const int k = static_cast<int>(layout.containers.size());

  ContainerPackResult res;
  res.packing.region = region;
  res.container_of.assign(n, -1);
  if (k == 0 || n == 0) return res;

  // One GAP bin per container. Horizontal bins consume height, vertical bins
  // width, area bins a (1-2*eps) fraction of their area; inadmissible
  // item/bin pairs get an oversized size. With rotations, each item enters
  // each bin in its cheaper admissible orientation.
  GapInstance gap;
  gap.capacities.resize(k);
  std::vector<std::vector<bool>> use_rot(n, std::vector<bool>(k, false));
  for (int j = 0; j < k; ++j) {
    const Container& c = layout.containers[j];
    switch (c.kind) {
      case ContainerKind::Horizontal: gap.capacities[j] = c.rect.h; break;
      case ContainerKind::Vertical: gap.capacities[j] = c.rect.w; break;
      case ContainerKind::Area:
        gap.capacities[j] = to_ll(rfloor((1 - 2 * eps) * c.rect.w * c.rect.h));
        break;
    }
  }
  gap.sizes.assign(n, std::vector<long long>(k, 0));
  gap.profits.assign(n, std::vector<long long>(k, 0));
  for (int i = 0; i < n; ++i) {
    const Item& it = inst.items[i];
    for (int j = 0; j < k; ++j) {
      const Container& c = layout.containers[j];
      const long long reject = gap.capacities[j] + 1;
      long long best_size = reject;
      bool best_rot = false;
      for (int o = 0; o < (inst.rotations ? 2 : 1); ++o) {
        const long long w = o ? it.h : it.w, h = o ? it.w : it.h;
        long long size = reject;
        switch (c.kind) {
          case ContainerKind::Horizontal:
            if (w <= c.rect.w && h <= c.rect.h) size = h;
            break;
          case ContainerKind::Vertical:
            if (w <= c.rect.w && h <= c.rect.h) size = w;
            break;
          case ContainerKind::Area:
            if (Rational(w) <= eps * c.rect.w && Rational(h) <= eps * c.rect.h) size = w * h;
            break;
        }
        if (size < best_size) {
          best_size = size;
          best_rot = o == 1;
        }
      }
      gap.sizes[i][j] = best_size;
      gap.profits[i][j] = best_size >= reject ? 0 : it.p;
      use_rot[i][j] = best_rot;
    }
  }

  GapResult gres = gap_ptas(gap, eps);

  // Realize each bin according to its kind.
  for (int j = 0; j < k; ++j) {
    const Container& c = layout.containers[j];
    std::vector<int> members;
    for (int i = 0; i < n; ++i)
      if (gres.assignment[i] == j) members.push_back(i);
    if (members.empty()) continue;
    std::sort(members.begin(), members.end(),
              [&](int a, int b) { return inst.items[a].id < inst.items[b].id; });
    if (c.kind == ContainerKind::Area) {
      std::vector<Item> eff;
      for (int i : members) {
        const Item& it = inst.items[i];
        eff.push_back(use_rot[i][j] ? Item{it.id, it.h, it.w, it.p} : it);
      }
      NfdhResult nf = nfdh_pack(eff, c.rect.w, c.rect.h);
      if (!nf.leftover.empty())
        throw std::logic_error("pack_into_containers: shelf packing overflowed an area bin");
      for (auto pl : nf.packing.placements) {
        pl.x += c.rect.x;
        pl.y += c.rect.y;
        for (int i : members)
          if (inst.items[i].id == pl.item_id && use_rot[i][j]) pl.rotated = true;
        res.packing.placements.push_back(pl);
      }
    } else {
      long long off = 0;
      for (int i : members) {
        const Item& it = inst.items[i];
        const bool rot = use_rot[i][j];
        const long long w = rot ? it.h : it.w, h = rot ? it.w : it.h;
        Placement pl{it.id, 0, 0, rot};
        if (c.kind == ContainerKind::Horizontal) {
          pl.x = c.rect.x;
          pl.y = c.rect.y + off;
          off += h;
        } else {
          pl.x = c.rect.x + off;
          pl.y = c.rect.y;
          off += w;
        }
        res.packing.placements.push_back(pl);
      }
    }
    for (int i : members) res.container_of[i] = j;
  }
  res.profit = gres.profit;
  res.packing.canonicalize();
  ValidationReport rep = validate_packing(inst, res.packing);
  if (!rep.ok)
    throw std::logic_error("pack_into_containers: invalid realization: " + rep.violations[0]);
  return res;
}

namespace {

Item transpose_item(const Item& it) { return {it.id, it.h, it.w, it.p}; }

// Shrinking for a horizontal container of the given width/height; returns
// containers with rect sizes only (w, h), caller places and orients them.
struct FlatShrink {
  std::vector<std::pair<long long, long long>> boxes;  // (w, h)
  std::vector<std::vector<Item>> assigned;
  long long kept_profit = 0;
};

FlatShrink shrink_horizontal(long long W, const std::vector<Item>& packed, const Rational& eps,
                             Rational delta) {
  FlatShrink out;
  if (packed.empty()) return out;
  long long min_w = packed[0].w;
  for (const auto& it : packed) min_w = std::min(min_w, it.w);
  if (delta <= 0) delta = Rational(min_w, W);

  // Width groups: within a group the widest item exceeds the narrowest by a
  // factor of at most (1+eps).
  std::map<long long, std::vector<Item>> groups;
  const Rational base = delta * W;
  for (const auto& it : packed) {
    long long key = 0;
    Rational bound = base * (1 + eps);
    while (bound < it.w) {
      bound *= (1 + eps);
      ++key;
    }
    groups[key].push_back(it);
  }

  for (auto& [key, g] : groups) {
    std::vector<Item> cur = g;
    long long P = 0;
    for (const auto& it : cur) P += it.p;
    for (;;) {
      long long gw = 0, gh = 0;
      for (const auto& it : cur) {
        gw = std::max(gw, it.w);
        gh += it.h;
      }
      if (cur.empty()) break;
      const Rational tall_thr = eps * gh;
      std::vector<Item> tall, rest;
      for (const auto& it : cur) (Rational(it.h) > tall_thr ? tall : rest).push_back(it);
      if (tall.empty()) {
        // Every item is short: drop the cheapest block of height >= eps*gh
        // and shrink the container by that height.
        std::vector<std::vector<Item>> blocks(1);
        long long bh = 0;
        for (const auto& it : cur) {
          blocks.back().push_back(it);
          bh += it.h;
          if (Rational(bh) >= tall_thr && &it != &cur.back()) {
            blocks.emplace_back();
            bh = 0;
          }
        }
        // The last block may be short; it is not a removal candidate.
        size_t cheapest = blocks.size();
        long long cheapest_p = 0;
        for (size_t b = 0; b < blocks.size(); ++b) {
          long long hsum = 0, psum = 0;
          for (const auto& it : blocks[b]) {
            hsum += it.h;
            psum += it.p;
          }
          if (Rational(hsum) < tall_thr) continue;
          if (cheapest == blocks.size() || psum < cheapest_p) {
            cheapest = b;
            cheapest_p = psum;
          }
        }
        std::vector<Item> kept;
        long long kept_h = 0;
        for (size_t b = 0; b < blocks.size(); ++b) {
          if (b == cheapest) continue;
          for (const auto& it : blocks[b]) {
            kept.push_back(it);
            kept_h += it.h;
          }
        }
        if (!kept.empty()) {
          out.boxes.push_back({gw, kept_h});
          out.assigned.push_back(kept);
          for (const auto& it : kept) out.kept_profit += it.p;
        }
        break;
      }
      long long tall_p = 0;
      for (const auto& it : tall) tall_p += it.p;
      if (Rational(tall_p) <= eps * P) {
        // Cheap tall set: drop it and shrink the container height.
        if (!rest.empty()) {
          long long rh = 0;
          for (const auto& it : rest) rh += it.h;
          out.boxes.push_back({gw, rh});
          out.assigned.push_back(rest);
          for (const auto& it : rest) out.kept_profit += it.p;
        }
        break;
      }
      // Profitable tall items get exact-size private containers; iterate on
      // the rest (at most 1/eps iterations since each removes > eps*P).
      for (const auto& it : tall) {
        out.boxes.push_back({it.w, it.h});
        out.assigned.push_back({it});
        out.kept_profit += it.p;
      }
      cur = rest;
    }
  }
  return out;
}

}  // namespace

ShrinkResult shrink_container(const Container& c, const std::vector<Item>& packed_items,
                              const Rational& eps, const Rational& delta) {
  if (eps <= 0 || eps > Rational(1, 3))
    throw std::invalid_argument("shrink_container: eps must be in (0, 1/3]");
  if (c.kind == ContainerKind::Area)
    throw std::invalid_argument("shrink_container: area containers are not supported");
  const bool horiz = c.kind == ContainerKind::Horizontal;

  std::vector<Item> items = packed_items;
  if (!horiz)
    for (auto& it : items) it = transpose_item(it);
  const long long W = horiz ? c.rect.w : c.rect.h;

  FlatShrink flat = shrink_horizontal(W, items, eps, delta);

  ShrinkResult res;
  res.kept_profit = flat.kept_profit;
  long long off = 0;
  for (size_t b = 0; b < flat.boxes.size(); ++b) {
    auto [bw, bh] = flat.boxes[b];
    Container nc;
    nc.kind = c.kind;
    if (horiz) {
      nc.rect = {c.rect.x, c.rect.y + off, bw, bh};
    } else {
      nc.rect = {c.rect.x + off, c.rect.y, bh, bw};
    }
    off += bh;
    std::vector<Item> orig = flat.assigned[b];
    if (!horiz)
      for (auto& it : orig) it = transpose_item(it);
    res.containers.push_back(nc);
    res.assigned.push_back(orig);
  }
  return res;
}

RoundResult round_container(const Container& c, const std::vector<Item>& items,
                            const Rational& eps, long long k) {
  if (eps <= 0 || eps >= 1)
    throw std::invalid_argument("round_container: eps must be in (0,1)");
  if (Rational(k) < 1 / eps) throw std::invalid_argument("round_container: k must be >= 1/eps");
  if (c.kind == ContainerKind::Area)
    throw std::invalid_argument("round_container: area containers are not supported");
  const bool horiz = c.kind == ContainerKind::Horizontal;

  std::vector<Item> work = items;
  if (!horiz)
    for (auto& it : work) it = transpose_item(it);

  RoundResult res;
  res.container = c;
  if (work.empty()) {
    res.container.rect.w = 0;
    res.container.rect.h = 0;
    return res;
  }
  long long wmax = 0;
  for (const auto& it : work) wmax = std::max(wmax, it.w);

  long long new_h = 0;
  const long long cap = to_ll(rceil(1 / eps));
  if (static_cast<long long>(work.size()) <= cap) {
    for (const auto& it : work) new_h += it.h;
  } else {
    // Drop the least profitable of the ceil(1/eps) tallest, then snap the
    // height of the rest to h(TALL) + i * h_dropped.
    std::vector<Item> sorted = work;
    std::sort(sorted.begin(), sorted.end(), [](const Item& a, const Item& b) {
      if (a.h != b.h) return a.h > b.h;
      return a.id < b.id;
    });
    size_t drop = 0;
    for (size_t t = 1; t < static_cast<size_t>(cap); ++t)
      if (sorted[t].p < sorted[drop].p || (sorted[t].p == sorted[drop].p && sorted[t].id < sorted[drop].id))
        drop = t;
    const Item dropped = sorted[drop];
    long long tall_h = 0, rest_h = 0;
    for (size_t t = 0; t < sorted.size(); ++t) {
      if (t < static_cast<size_t>(cap))
        tall_h += sorted[t].h;
      else if (t != drop)
        rest_h += sorted[t].h;
    }
    const long long i = (rest_h + dropped.h - 1) / dropped.h;
    new_h = tall_h + i * dropped.h;
    work.clear();
    for (size_t t = 0; t < sorted.size(); ++t)
      if (t != drop) work.push_back(sorted[t]);
  }

  if (horiz) {
    res.container.rect.w = wmax;
    res.container.rect.h = std::min(new_h, c.rect.h);
  } else {
    res.container.rect.h = wmax;
    res.container.rect.w = std::min(new_h, c.rect.w);
    for (auto& it : work) it = transpose_item(it);
  }
  res.kept = work;
  return res;
}

RoundResult round_area_container(const Container& c, const std::vector<Item>& items,
                                 const Rational& eps) {
  if (eps <= 0 || eps >= Rational(1, 2))
    throw std::invalid_argument("round_area_container: eps must be in (0, 1/2)");
  RoundResult res;
  res.container = c;
  if (items.empty()) {
    res.container.rect.w = 0;
    res.container.rect.h = 0;
    return res;
  }
  long long wmax = 0, hmax = 0;
  for (const auto& it : items) {
    wmax = std::max(wmax, it.w);
    hmax = std::max(hmax, it.h);
    if (Rational(it.w) > eps * c.rect.w || Rational(it.h) > eps * c.rect.h)
      throw std::invalid_argument("round_area_container: item not eps-small for the container");
  }
  const long long n = static_cast<long long>(items.size());
  const long long cw = std::min(c.rect.w, n * wmax);
  const long long ch = std::min(c.rect.h, n * hmax);
  res.container.rect.w = wmax * (cw / wmax);
  res.container.rect.h = hmax * (ch / hmax);

  // Greedy by non-increasing profit/area ratio, prefix-stopped at a
  // (1-2*eps) fraction of the (shrunk) container area.
  std::vector<Item> sorted = items;
  std::sort(sorted.begin(), sorted.end(), [](const Item& a, const Item& b) {
    const BigInt lhs = BigInt(a.p) * (BigInt(b.w) * b.h);
    const BigInt rhs = BigInt(b.p) * (BigInt(a.w) * a.h);
    if (lhs != rhs) return lhs > rhs;
    return a.id < b.id;
  });
  const Rational budget = (1 - 2 * eps) * cw * ch;
  Rational used = 0;
  for (const auto& it : sorted) {
    if (used + Rational(it.w) * it.h > budget) break;
    used += Rational(it.w) * it.h;
    res.kept.push_back(it);
  }
  return res;
}

FillResult greedy_integral_fill(const std::vector<Container>& family,
                                const std::vector<Item>& slices) {
  FillResult res;
  res.assignment.assign(slices.size(), -1);
  std::map<long long, std::vector<size_t>> by_width;  // slice queues, input order
  for (size_t s = 0; s < slices.size(); ++s) by_width[slices[s].w].push_back(s);
  for (auto& [w, q] : by_width) std::reverse(q.begin(), q.end());  // pop_back = next

  for (size_t cidx = 0; cidx < family.size(); ++cidx) {
    const Container& c = family[cidx];
    auto it = by_width.find(c.rect.w);
    if (it == by_width.end()) continue;
    auto& queue = it->second;
    long long used = 0;
    while (!queue.empty()) {
      size_t s = queue.back();
      if (used + slices[s].h > c.rect.h) {
        // Overflow: discard this slice and close the container.
        res.discarded.push_back(static_cast<int>(s));
        queue.pop_back();
        break;
      }
      used += slices[s].h;
      res.assignment[s] = static_cast<int>(cidx);
      queue.pop_back();
    }
  }
  for (size_t s = 0; s < slices.size(); ++s) {
    if (res.assignment[s] != -1) continue;
    if (std::find(res.discarded.begin(), res.discarded.end(), static_cast<int>(s)) ==
        res.discarded.end())
      res.unplaced.push_back(static_cast<int>(s));
  }
  return res;
}

}  // namespace gk
