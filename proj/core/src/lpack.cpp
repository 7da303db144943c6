#include "gkpack/lpack.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <unordered_map>

#include "gkpack/validate.hpp"

namespace gk {

namespace {

// Normal-form processing orders: wide items bottom-to-top by non-increasing
// width, tall items left-to-right by non-increasing height.
void sort_hor(std::vector<Item>& v) {
  std::sort(v.begin(), v.end(), [](const Item& a, const Item& b) {
    if (a.w != b.w) return a.w > b.w;
    if (a.h != b.h) return a.h > b.h;
    return a.id < b.id;
  });
}

void sort_ver(std::vector<Item>& v) {
  std::sort(v.begin(), v.end(), [](const Item& a, const Item& b) {
    if (a.h != b.h) return a.h > b.h;
    if (a.w != b.w) return a.w > b.w;
    return a.id < b.id;
  });
}

}  // namespace

void LInstance::check() const {
  if (shape.N < 1) throw std::invalid_argument("l-instance: N must be positive");
  if (shape.w_l < 0 || shape.w_l > shape.N || shape.h_l < 0 || shape.h_l > shape.N)
    throw std::invalid_argument("l-instance: arm sizes must lie in [0, N]");
  std::vector<int> ids;
  auto base = [&](const Item& it) {
    if (it.w < 1 || it.h < 1 || it.w > shape.N || it.h > shape.N)
      throw std::invalid_argument("l-instance: item " + std::to_string(it.id) +
                                  " does not fit the knapsack");
    if (it.p < 0) throw std::invalid_argument("l-instance: negative profit");
    ids.push_back(it.id);
  };
  for (const auto& it : hor) {
    base(it);
    if (2 * it.w <= shape.N)
      throw std::invalid_argument("l-instance: wide item " + std::to_string(it.id) +
                                  " must have w > N/2");
  }
  for (const auto& it : ver) {
    base(it);
    if (2 * it.h <= shape.N)
      throw std::invalid_argument("l-instance: tall item " + std::to_string(it.id) +
                                  " must have h > N/2");
  }
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw std::invalid_argument("l-instance: duplicate item id");
}

std::optional<Packing> normalize_l_packing(const std::vector<Item>& selected_hor,
                                           const std::vector<Item>& selected_ver,
                                           const LShape& shape) {
  std::vector<Item> hor = selected_hor, ver = selected_ver;
  sort_hor(hor);
  sort_ver(ver);

  Packing pk;
  pk.region = {0, 0, shape.N, shape.N};
  std::vector<RectI> hrects, vrects;

  long long y = 0;
  for (const auto& it : hor) {
    hrects.push_back({shape.N - it.w, y, it.w, it.h});
    y += it.h;
    if (y > shape.h_l) return std::nullopt;  // bottom arm overflow
  }
  long long x = 0;
  for (const auto& it : ver) {
    vrects.push_back({x, shape.N - it.h, it.w, it.h});
    x += it.w;
    if (x > shape.w_l) return std::nullopt;  // left arm overflow
  }
  for (const auto& hr : hrects)
    for (const auto& vr : vrects)
      if (interiors_overlap(hr, vr)) return std::nullopt;

  for (size_t i = 0; i < hor.size(); ++i)
    pk.placements.push_back({hor[i].id, hrects[i].x, hrects[i].y, false});
  for (size_t i = 0; i < ver.size(); ++i)
    pk.placements.push_back({ver[i].id, vrects[i].x, vrects[i].y, false});
  pk.canonicalize();
  return pk;
}

LPackResult lpack_exact_dp(const LInstance& inst, const std::vector<Rational>& Tin,
                           const std::vector<Rational>& Rin) {
  inst.check();
  const long long N = inst.shape.N;
  std::vector<Item> hor = inst.hor, ver = inst.ver;
  sort_hor(hor);
  sort_ver(ver);
  const size_t nh = hor.size(), nv = ver.size();

  auto prep = [N](std::vector<Rational> v) {
    v.push_back(0);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    v.erase(std::remove_if(v.begin(), v.end(), [&](const Rational& q) { return q < 0 || q > N; }),
            v.end());
    return v;
  };
  const std::vector<Rational> T = prep(Tin), R = prep(Rin);
  const size_t NT = T.size(), NR = R.size();

  // Minimal candidate coordinate accommodating value `need`, or SIZE_MAX.
  auto snap = [](const std::vector<Rational>& set, const Rational& need) -> size_t {
    auto it = std::lower_bound(set.begin(), set.end(), need);
    if (it == set.end()) return std::numeric_limits<size_t>::max();
    return static_cast<size_t>(it - set.begin());
  };

  std::unordered_map<unsigned long long, long long> memo;
  auto key = [&](size_t i, size_t ti, size_t j, size_t ri) {
    return ((static_cast<unsigned long long>(i) * NT + ti) * (nv + 1) + j) * NR + ri;
  };

  // Best profit from the remaining items given the current stack extents
  // T[ti] (top of the wide stack) and R[ri] (right of the tall stack).
  std::function<long long(size_t, size_t, size_t, size_t)> rec = [&](size_t i, size_t ti, size_t j,
                                                                     size_t ri) -> long long {
    if (i == nh && j == nv) return 0;
    const unsigned long long k = key(i, ti, j, ri);
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;

    long long best = 0;
    if (i < nh) best = std::max(best, rec(i + 1, ti, j, ri));
    if (j < nv) best = std::max(best, rec(i, ti, j + 1, ri));
    if (i < nh) {
      size_t nt = snap(T, T[ti] + hor[i].h);
      if (nt != std::numeric_limits<size_t>::max() && T[nt] <= inst.shape.h_l &&
          Rational(hor[i].w) <= N - R[ri])
        best = std::max(best, hor[i].p + rec(i + 1, nt, j, ri));
    }
    if (j < nv) {
      size_t nr = snap(R, R[ri] + ver[j].w);
      if (nr != std::numeric_limits<size_t>::max() && R[nr] <= inst.shape.w_l &&
          Rational(ver[j].h) <= N - T[ti])
        best = std::max(best, ver[j].p + rec(i, ti, j + 1, nr));
    }
    memo.emplace(k, best);
    return best;
  };

  const long long opt = rec(0, 0, 0, 0);

  // Reconstruction: follow, in a fixed order, the first transition that
  // achieves the memoized value.
  LPackResult res;
  res.profit = opt;
  res.packing.region = {0, 0, N, N};
  size_t i = 0, ti = 0, j = 0, ri = 0;
  while (i < nh || j < nv) {
    const long long want = rec(i, ti, j, ri);
    if (i < nh) {
      size_t nt = snap(T, T[ti] + hor[i].h);
      if (nt != std::numeric_limits<size_t>::max() && T[nt] <= inst.shape.h_l &&
          Rational(hor[i].w) <= N - R[ri] && hor[i].p + rec(i + 1, nt, j, ri) == want) {
        // top T[nt]: bottom floors onto the grid, right-aligned.
        res.packing.placements.push_back(
            {hor[i].id, N - hor[i].w, to_ll(rfloor(T[nt] - hor[i].h)), false});
        ++i;
        ti = nt;
        continue;
      }
    }
    if (j < nv) {
      size_t nr = snap(R, R[ri] + ver[j].w);
      if (nr != std::numeric_limits<size_t>::max() && R[nr] <= inst.shape.w_l &&
          Rational(ver[j].h) <= N - T[ti] && ver[j].p + rec(i, ti, j + 1, nr) == want) {
        res.packing.placements.push_back(
            {ver[j].id, to_ll(rfloor(R[nr] - ver[j].w)), N - ver[j].h, false});
        ++j;
        ri = nr;
        continue;
      }
    }
    if (i < nh && rec(i + 1, ti, j, ri) == want) {
      ++i;
      continue;
    }
    ++j;
  }
  res.packing.canonicalize();
  return res;
}

LPackResult lpack_oracle(const LInstance& inst, int item_cap) {
  inst.check();
  const size_t nh = inst.hor.size(), nv = inst.ver.size();
  if (nh + nv > static_cast<size_t>(item_cap))
    throw resource_error("lpack_oracle: too many items for exhaustive enumeration");

  LPackResult best;
  best.packing.region = {0, 0, inst.shape.N, inst.shape.N};
  for (unsigned long long mh = 0; mh < (1ULL << nh); ++mh) {
    std::vector<Item> sh;
    long long ph = 0;
    for (size_t b = 0; b < nh; ++b)
      if (mh >> b & 1) {
        sh.push_back(inst.hor[b]);
        ph += inst.hor[b].p;
      }
    for (unsigned long long mv = 0; mv < (1ULL << nv); ++mv) {
      std::vector<Item> sv;
      long long pv = 0;
      for (size_t b = 0; b < nv; ++b)
        if (mv >> b & 1) {
          sv.push_back(inst.ver[b]);
          pv += inst.ver[b].p;
        }
      if (ph + pv <= best.profit && (mh != 0 || mv != 0)) continue;
      auto pk = normalize_l_packing(sh, sv, inst.shape);
      if (!pk) continue;
      if (ph + pv > best.profit || best.packing.placements.empty()) {
        best.profit = ph + pv;
        best.packing = *pk;
      }
    }
  }
  return best;
}

std::vector<size_t> growing_subsequence(const std::vector<Rational>& heights) {
  std::vector<size_t> g;
  for (size_t i = 0; i < heights.size(); ++i) {
    if (g.empty() || heights[i] >= heights[g.back()]) g.push_back(i);
  }
  return g;
}

ShiftResult delete_and_shift(const std::vector<Item>& stack_bottom_up, int r, const Rational& eps,
                             int n_total) {
  if (r < 1) throw std::invalid_argument("delete_and_shift: r must be >= 1");
  if (eps <= 0 || eps >= 1) throw std::invalid_argument("delete_and_shift: eps must be in (0,1)");
  const long long n = n_total >= 0 ? n_total : static_cast<long long>(stack_bottom_up.size());
  if (n < 1) return {};

  const long long q = to_ll(rceil(1 / eps));

  std::function<ShiftResult(const std::vector<Item>&, int)> ds =
      [&](const std::vector<Item>& B, int level) -> ShiftResult {
    ShiftResult out;
    const size_t m = B.size();
    if (m == 0) return out;

    std::vector<Rational> heights;
    std::vector<Rational> bottom(m, 0);  // normal form: contiguous from 0
    for (size_t i = 0; i < m; ++i) {
      heights.emplace_back(B[i].h);
      if (i > 0) bottom[i] = bottom[i - 1] + B[i - 1].h;
    }
    const std::vector<size_t> G = growing_subsequence(heights);
    const size_t gm = G.size();
    // Segment j: items strictly between G[j] and the next member (or the top).
    auto segment = [&](size_t j) {
      std::vector<Item> seg;
      size_t hi = (j + 1 < gm) ? G[j + 1] : m;
      for (size_t t = G[j] + 1; t < hi; ++t) seg.push_back(B[t]);
      return seg;
    };

    if (level == 1) {
      // Delete the whole growing subsequence; round each survivor's height to
      // a multiple of h(g_j)/(2n) and restack from the rounded base of g_j.
      for (size_t j = 0; j < gm; ++j) {
        const Item& g = B[G[j]];
        out.deleted.insert(g.id);
        const Rational grain(g.h, 2 * n);
        Rational run = round_up_to_multiple(bottom[G[j]], Rational(g.h, 2));
        for (const Item& it : segment(j)) {
          run += round_up_to_multiple(Rational(it.h), grain);
          out.shift[it.id] = run;
        }
      }
      return out;
    }

    // level > 1: delete only the cheapest residue class of G (mod q), keep the
    // other members, and recurse on every segment with level-1 rounds.
    std::vector<bool> del(gm, false);
    if (static_cast<long long>(gm) >= q) {
      long long best_cost = -1;
      size_t best_x = 0;
      for (size_t x = 0; x < static_cast<size_t>(q); ++x) {
        long long cost = 0;
        for (size_t j = x; j < gm; j += q) cost += B[G[j]].p;
        if (best_cost < 0 || cost < best_cost) {
          best_cost = cost;
          best_x = x;
        }
      }
      for (size_t j = best_x; j < gm; j += q) del[j] = true;
    }
    for (size_t j = 0; j < gm; ++j)
      if (del[j]) out.deleted.insert(B[G[j]].id);

    std::vector<ShiftResult> subs(gm);
    std::vector<Rational> smax(gm, 0);
    for (size_t j = 0; j < gm; ++j) {
      subs[j] = ds(segment(j), level - 1);
      for (int id : subs[j].deleted) out.deleted.insert(id);
      for (const auto& kv : subs[j].shift) smax[j] = std::max(smax[j], kv.second);
    }

    for (size_t j = 0; j < gm; ++j) {
      // Topmost deleted member at or below position j (may be j itself).
      long long dq = -1;
      for (size_t k = 0; k <= j; ++k)
        if (del[k]) dq = static_cast<long long>(k);
      Rational base = 0;
      if (dq >= 0) {
        const Item& d = B[G[dq]];
        base = round_up_to_multiple(bottom[G[dq]], Rational(d.h, 2));
      }
      Rational acc = base;
      for (long long k = std::max<long long>(dq + 1, 0); k <= static_cast<long long>(j); ++k)
        if (!del[k]) acc += B[G[k]].h;
      for (long long k = std::max<long long>(dq, 0); k < static_cast<long long>(j); ++k)
        acc += smax[k];
      if (!del[j]) out.shift[B[G[j]].id] = acc;  // top of the kept g_j
      // Items of segment j sit above g_j's new position (acc already includes
      // h(g_j) when g_j is kept, and equals the vacated base when deleted).
      Rational seg_base = acc;
      for (const auto& kv : subs[j].shift) out.shift[kv.first] = seg_base + kv.second;
    }
    return out;
  };

  return ds(stack_bottom_up, r);
}

namespace {

void cap_check(size_t sz, size_t cap) {
  if (sz > cap) throw resource_error("build_restricted_sets: candidate set exceeds the size cap");
}

// Candidate coordinate sets along one axis. `ext` holds the stacking extents
// (heights of wide items for T, widths of tall items for R).
std::vector<std::vector<Rational>> build_levels(const std::vector<long long>& ext, long long N,
                                                const Rational& eps, int levels, size_t cap) {
  const long long n = static_cast<long long>(ext.size());
  const long long q = to_ll(rceil(1 / eps));
  std::vector<std::vector<Rational>> out;

  std::set<Rational> t1;
  t1.insert(0);
  for (long long e : ext) {
    const Rational grain(e, 2 * n);
    for (long long a = 1; a <= 4 * n * n; ++a) {
      const Rational v = a * grain;
      if (v > N) break;
      t1.insert(v);
      cap_check(t1.size(), cap);
    }
  }
  out.emplace_back(t1.begin(), t1.end());

  for (int r = 2; r <= levels; ++r) {
    // Half-extent multiples a*e/2, 0 <= a <= 2n-1.
    std::set<Rational> sa;
    sa.insert(0);
    for (long long e : ext)
      for (long long a = 1; a <= 2 * n - 1; ++a) {
        const Rational v(a * e, 2);
        if (v > N) break;
        sa.insert(v);
        cap_check(sa.size(), cap);
      }
    // Sums of at most q-1 extents.
    std::set<Rational> hb;
    hb.insert(0);
    for (long long step = 0; step < q - 1; ++step) {
      std::set<Rational> nxt = hb;
      for (const auto& x : hb)
        for (long long e : ext) {
          const Rational v = x + e;
          if (v <= N) nxt.insert(v);
        }
      cap_check(nxt.size(), cap);
      if (nxt.size() == hb.size()) break;
      hb.swap(nxt);
    }
    // Sums of at most q members of the previous level.
    const auto& prev = out[r - 2];
    std::set<Rational> sc;
    sc.insert(0);
    for (long long step = 0; step < q; ++step) {
      std::set<Rational> nxt = sc;
      for (const auto& x : sc)
        for (const auto& t : prev) {
          const Rational v = x + t;
          if (v <= N) nxt.insert(v);
        }
      cap_check(nxt.size(), cap);
      if (nxt.size() == sc.size()) break;
      sc.swap(nxt);
    }
    // Minkowski combination, clipped to [0, N].
    std::set<Rational> ab;
    for (const auto& s : sa)
      for (const auto& x : hb) {
        const Rational v = s + x;
        if (v <= N) ab.insert(v);
        cap_check(ab.size(), cap);
      }
    std::set<Rational> tr;
    for (const auto& x : ab)
      for (const auto& y : sc) {
        const Rational v = x + y;
        if (v <= N) tr.insert(v);
        cap_check(tr.size(), cap);
      }
    out.emplace_back(tr.begin(), tr.end());
  }

  // Sanity: the set size stays under the analytic bound (2n)^((r+2+(r-1)e)/e^(r-1)).
  if (n >= 1) {
    const double e = eps.convert_to<double>();
    for (int r = 1; r <= levels; ++r) {
      const double exponent = (r + 2 + (r - 1) * e) / std::pow(e, r - 1);
      const double bound_log = exponent * std::log(2.0 * static_cast<double>(n));
      if (std::log(static_cast<double>(out[r - 1].size())) > bound_log + 1e-9)
        throw std::logic_error("build_restricted_sets: size bound violated");
    }
  }
  return out;
}

}  // namespace

std::vector<RestrictedSets> build_restricted_sets(const LInstance& inst, const Rational& eps,
                                                  size_t size_cap) {
  inst.check();
  if (eps <= 0 || eps >= 1)
    throw std::invalid_argument("build_restricted_sets: eps must be in (0,1)");
  const int levels = static_cast<int>(to_ll(rceil(1 / eps)));

  std::vector<long long> hext, vext;
  for (const auto& it : inst.hor) hext.push_back(it.h);
  for (const auto& it : inst.ver) vext.push_back(it.w);
  auto tlv = build_levels(hext, inst.shape.N, eps, levels, size_cap);
  auto rlv = build_levels(vext, inst.shape.N, eps, levels, size_cap);

  std::vector<RestrictedSets> out(levels);
  for (int r = 1; r <= levels; ++r) {
    out[r - 1].r_level = r;
    out[r - 1].T = tlv[r - 1];
    out[r - 1].R = rlv[r - 1];
  }
  return out;
}

LPackResult lpack_ptas(const LInstance& inst, const Rational& eps) {
  inst.check();
  auto sets = build_restricted_sets(inst, eps);
  LPackResult best;
  best.packing.region = {0, 0, inst.shape.N, inst.shape.N};
  bool first = true;
  for (const auto& st : sets)
    for (const auto& sr : sets) {
      LPackResult cur = lpack_exact_dp(inst, st.T, sr.R);
      if (first || cur.profit > best.profit) {
        best = cur;
        first = false;
      }
    }
  return best;
}

}  // namespace gk
