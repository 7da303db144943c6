#include "gkpack/classify.hpp"

#include <limits>
#include <utility>
#include <vector>

namespace gk {

std::function<Rational(const Rational&)> default_chain_map(const Rational& eps) {
  return [eps](const Rational& x) { return eps * x * x * x; };
}

namespace {

ItemClasses classify_for_pair(const Instance& inst, const Rational& el, const Rational& es) {
  ItemClasses out;
  out.eps_large = el;
  out.eps_small = es;
  const Rational big = el * inst.N;
  const Rational small = es * inst.N;
  for (const auto& it : inst.items) {
    const bool w_small = Rational(it.w) <= small;
    const bool h_small = Rational(it.h) <= small;
    const bool w_big = Rational(it.w) > big;
    const bool h_big = Rational(it.h) > big;
    ItemClass c;
    if (w_small && h_small)
      c = ItemClass::Small;
    else if (w_big && h_big)
      c = ItemClass::Large;
    else if (w_big && h_small)
      c = ItemClass::Horizontal;
    else if (h_big && w_small)
      c = ItemClass::Vertical;
    else {
      c = ItemClass::Intermediate;
      out.intermediate_profit += it.p;
    }
    out.classes[it.id] = c;
  }
  return out;
}

}  // namespace

ItemClasses classify_items(const Instance& inst, const Rational& eps,
                           const std::function<Rational(const Rational&)>& f_in) {
  if (eps <= 0 || eps >= 1) throw std::invalid_argument("classify_items: eps must be in (0,1)");
  auto f = f_in ? f_in : default_chain_map(eps);

  const long long pairs = to_ll(rceil(2 / eps)) + 1;
  Rational cur = eps;
  bool have_best = false;
  ItemClasses best;
  for (long long i = 0; i < pairs; ++i) {
    Rational next = f(cur);
    if (!(next > 0 && next < cur))
      throw std::invalid_argument("classify_items: chain map must satisfy 0 < f(x) < x");
    ItemClasses cand = classify_for_pair(inst, cur, next);
    if (!have_best || cand.intermediate_profit < best.intermediate_profit) {
      best = std::move(cand);
      have_best = true;
    }
    if (best.intermediate_profit == 0) break;
    // Once the large threshold is below one grid unit, no integer side can be
    // intermediate for this or any later pair; the pair just evaluated scored
    // 0, so the loop has already ended via the break above.
    cur = next;
    if (cur * inst.N < 1) {
      ItemClasses tail = classify_for_pair(inst, cur, f(cur));
      if (tail.intermediate_profit < best.intermediate_profit) best = std::move(tail);
      break;
    }
  }
  return best;
}

}  // namespace gk
