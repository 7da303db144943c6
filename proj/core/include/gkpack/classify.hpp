#pragma once

#include <functional>
#include <map>

#include "gkpack/types.hpp"

namespace gk {

enum class ItemClass { Small, Large, Horizontal, Vertical, Intermediate };

struct ItemClasses {
  Rational eps_large;
  Rational eps_small;
  std::map<int, ItemClass> classes;
  long long intermediate_profit = 0;  // profit of the Intermediate class
};

// Default chain map: f(x) = eps * x^3. Each step shrinks the threshold, so the
// candidate intervals (eps_small*N, eps_large*N] are nested below one another.
std::function<Rational(const Rational&)> default_chain_map(const Rational& eps);

// Builds the candidate chain e_1 = eps, e_{i+1} = f(e_i) (up to 2/eps + 1
// pairs) and returns the classification for the pair (eps_large, eps_small) =
// (e_i, e_{i+1}) minimizing the total profit of items with a side length in
// (eps_small*N, eps_large*N]. The chain is cut short once a threshold drops
// below one grid unit: from then on no item side can fall in the interval, so
// the intermediate profit is 0 and cannot be improved.
//
// Boundary conventions (fixed here once for every caller):
//   small:       w <= eps_small*N and h <= eps_small*N
//   large:       w >  eps_large*N and h >  eps_large*N
//   horizontal:  w >  eps_large*N and h <= eps_small*N
//   vertical:    h >  eps_large*N and w <= eps_small*N
//   intermediate: any side in (eps_small*N, eps_large*N]
ItemClasses classify_items(const Instance& inst, const Rational& eps,
                           const std::function<Rational(const Rational&)>& f = nullptr);

}  // namespace gk
