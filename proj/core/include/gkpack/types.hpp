#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gk {

// Exact rational arithmetic. Geometry lives on the integer grid; rationals are
// used for epsilon parameters, intermediate coordinates of the L-packing
// machinery, and the case-analysis linear programs.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline long long to_ll(const BigInt& v) { return static_cast<long long>(v); }

// Floor of an exact rational.
inline BigInt rfloor(const Rational& q) {
  BigInt n = numerator(q), d = denominator(q);
  BigInt quo = n / d;
  if (n < 0 && quo * d != n) --quo;
  return quo;
}

// Ceiling of an exact rational.
inline BigInt rceil(const Rational& q) { return -rfloor(-q); }

// Smallest multiple of `step` that is >= q (step > 0).
inline Rational round_up_to_multiple(const Rational& q, const Rational& step) {
  return Rational(rceil(q / step)) * step;
}

struct Item {
  int id = 0;
  long long w = 0;  // width in grid units
  long long h = 0;  // height in grid units
  long long p = 0;  // non-negative profit
};

struct Instance {
  long long N = 1;  // knapsack side length
  bool rotations = false;
  std::vector<Item> items;

  const Item* find(int id) const {
    for (const auto& it : items)
      if (it.id == id) return &it;
    return nullptr;
  }
};

struct Placement {
  int item_id = 0;
  long long x = 0;  // left
  long long y = 0;  // bottom
  bool rotated = false;
};

struct RectI {
  long long x = 0, y = 0, w = 0, h = 0;
  long long right() const { return x + w; }
  long long top() const { return y + h; }
};

struct Packing {
  RectI region;
  std::vector<Placement> placements;

  long long profit(const Instance& inst) const {
    long long s = 0;
    for (const auto& pl : placements) {
      const Item* it = inst.find(pl.item_id);
      if (it) s += it->p;
    }
    return s;
  }

  // Canonical form: placements sorted by item id. Used for deterministic
  // serialization and tie-breaking.
  void canonicalize();
};

// Placed footprint of an item (width/height swapped when rotated).
inline RectI footprint(const Item& it, const Placement& pl) {
  return pl.rotated ? RectI{pl.x, pl.y, it.h, it.w} : RectI{pl.x, pl.y, it.w, it.h};
}

// Open-rectangle semantics: rectangles overlap iff their interiors intersect,
// so shared edges are legal.
inline bool interiors_overlap(const RectI& a, const RectI& b) {
  return a.x < b.right() && b.x < a.right() && a.y < b.top() && b.y < a.top();
}

inline bool contains(const RectI& outer, const RectI& inner) {
  return inner.x >= outer.x && inner.y >= outer.y && inner.right() <= outer.right() &&
         inner.top() <= outer.top();
}

// Error taxonomy, mapped onto CLI exit codes by the tools.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace gk
