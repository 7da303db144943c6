#include "gkpack/gap.hpp"

#include <algorithm>
#include <cmath>

namespace gk {

void GapInstance::check() const {
  if (capacities.empty()) throw std::invalid_argument("gap: need at least one bin");
  for (long long c : capacities)
    if (c < 0) throw std::invalid_argument("gap: negative capacity");
  if (profits.size() != sizes.size()) throw std::invalid_argument("gap: sizes/profits mismatch");
  for (size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i].size() != capacities.size() || profits[i].size() != capacities.size())
      throw std::invalid_argument("gap: row " + std::to_string(i) + " has wrong width");
    for (size_t j = 0; j < capacities.size(); ++j)
      if (sizes[i][j] < 0 || profits[i][j] < 0)
        throw std::invalid_argument("gap: negative entry");
  }
}

std::vector<long long> gap_loads(const GapInstance& inst, const std::vector<int>& assignment) {
  std::vector<long long> load(inst.bins(), 0);
  for (int i = 0; i < inst.items(); ++i)
    if (assignment[i] != kUnassigned) load[assignment[i]] += inst.sizes[i][assignment[i]];
  return load;
}

GapResult gap_oracle(const GapInstance& inst, long long enumeration_cap) {
  inst.check();
  const int n = inst.items(), k = inst.bins();
  double combos = std::pow(static_cast<double>(k + 1), n);
  if (combos > static_cast<double>(enumeration_cap))
    throw resource_error("gap_oracle: (k+1)^n exceeds the enumeration cap");

  GapResult best;
  best.assignment.assign(n, kUnassigned);
  std::vector<int> cur(n, kUnassigned);
  std::vector<long long> load(k, 0);

  auto rec = [&](auto&& self, int i, long long profit) -> void {
    if (i == n) {
      if (profit > best.profit) {
        best.profit = profit;
        best.assignment = cur;
      }
      return;
    }
    cur[i] = kUnassigned;
    self(self, i + 1, profit);
    for (int j = 0; j < k; ++j) {
      if (load[j] + inst.sizes[i][j] > inst.capacities[j]) continue;
      cur[i] = j;
      load[j] += inst.sizes[i][j];
      self(self, i + 1, profit + inst.profits[i][j]);
      load[j] -= inst.sizes[i][j];
      cur[i] = kUnassigned;
    }
  };
  rec(rec, 0, 0);
  return best;
}

namespace {

// Shared DP over an explicit (possibly rounded) instance.
GapResult dp_solve(const GapInstance& inst, long long table_cap) {
  const int n = inst.items(), k = inst.bins();
  long long states = 1;
  for (long long c : inst.capacities) {
    states *= (c + 1);
    if (states > table_cap) throw resource_error("gap_dp: capacity product exceeds the table cap");
  }
  std::vector<long long> stride(k, 1);
  for (int j = 1; j < k; ++j) stride[j] = stride[j - 1] * (inst.capacities[j - 1] + 1);

  // table[i][s]: best profit using items 0..i-1 with capacity vector encoded s.
  std::vector<std::vector<long long>> table(n + 1, std::vector<long long>(states, 0));
  for (int i = 1; i <= n; ++i) {
    std::vector<long long> cvec(k, 0);
    for (long long s = 0; s < states; ++s) {
      long long best = table[i - 1][s];
      for (int j = 0; j < k; ++j) {
        long long sz = inst.sizes[i - 1][j];
        if (cvec[j] >= sz)
          best = std::max(best, inst.profits[i - 1][j] + table[i - 1][s - sz * stride[j]]);
      }
      table[i][s] = best;
      // advance the mixed-radix capacity vector
      for (int j = 0; j < k; ++j) {
        if (++cvec[j] <= inst.capacities[j]) break;
        cvec[j] = 0;
      }
    }
  }

  GapResult res;
  res.assignment.assign(n, kUnassigned);
  long long s = states - 1;
  std::vector<long long> cvec(inst.capacities);
  res.profit = table[n][s];
  for (int i = n; i >= 1; --i) {
    if (table[i][s] == table[i - 1][s]) continue;
    for (int j = 0; j < k; ++j) {
      long long sz = inst.sizes[i - 1][j];
      if (cvec[j] >= sz &&
          table[i][s] == inst.profits[i - 1][j] + table[i - 1][s - sz * stride[j]]) {
        res.assignment[i - 1] = j;
        s -= sz * stride[j];
        cvec[j] -= sz;
        break;
      }
    }
  }
  return res;
}

}  // namespace

GapResult gap_dp(const GapInstance& inst, long long table_cap) {
  inst.check();
  return dp_solve(inst, table_cap);
}

GapResult gap_augmented(const GapInstance& inst, const Rational& eps, long long table_cap) {
  inst.check();
  if (eps <= 0) throw std::invalid_argument("gap_augmented: eps must be positive");
  const int n = inst.items(), k = inst.bins();
  if (n == 0) return {0, {}};

  GapInstance rounded = inst;
  for (int j = 0; j < k; ++j) {
    const Rational mu = eps * inst.capacities[j] / n;
    if (mu < 1) {
      // eps*C_j < n: exact sizes are already fine-grained; only extend the
      // capacity to keep the augmented feasibility contract.
      rounded.capacities[j] = to_ll(rfloor((1 + eps) * inst.capacities[j]));
      continue;
    }
    rounded.capacities[j] = to_ll(rfloor((1 + eps) * inst.capacities[j] / mu));
    for (int i = 0; i < n; ++i) rounded.sizes[i][j] = to_ll(rceil(inst.sizes[i][j] / mu));
  }
  GapResult rres = dp_solve(rounded, table_cap);

  // Report the result in terms of the original instance.
  GapResult res;
  res.assignment = rres.assignment;
  res.profit = 0;
  for (int i = 0; i < n; ++i)
    if (res.assignment[i] != kUnassigned) res.profit += inst.profits[i][res.assignment[i]];
  return res;
}

GapResult gap_ptas(const GapInstance& inst, const Rational& eps, long long guess_budget) {
  inst.check();
  if (eps <= 0 || eps >= Rational(1, 3))
    throw std::invalid_argument("gap_ptas: eps must be in (0, 1/3)");
  const int n = inst.items(), k = inst.bins();
  if (n == 0) return {0, {}};
  const long long per_bin = to_ll(rceil(1 / (eps * eps)));

  // Enumerate partial assignments ("guessed" high-profit sets X_j, at most
  // 1/eps^2 items per bin, each item individually fitting its bin).
  GapResult best;
  best.assignment.assign(n, kUnassigned);
  long long visited = 0;

  std::vector<int> cur(n, kUnassigned);
  std::vector<long long> load(k, 0), count(k, 0);

  auto evaluate = [&]() {
    long long guessed_profit = 0;
    for (int i = 0; i < n; ++i)
      if (cur[i] != kUnassigned) guessed_profit += inst.profits[i][cur[i]];

    // Residual instance over unguessed items with shrunk leftover capacities.
    GapInstance residual;
    residual.capacities.resize(k);
    for (int j = 0; j < k; ++j)
      residual.capacities[j] = to_ll(rfloor((1 - eps) * (inst.capacities[j] - load[j])));
    std::vector<int> ids;
    for (int i = 0; i < n; ++i) {
      if (cur[i] != kUnassigned) continue;
      ids.push_back(i);
      residual.sizes.push_back(inst.sizes[i]);
      residual.profits.push_back(inst.profits[i]);
    }
    GapResult sub = gap_augmented(residual, eps);
    // Augmented feasibility: loads <= (1+eps)(1-eps)(C_j - load_j) <= C_j - load_j,
    // so the combined assignment is feasible under the original capacities.
    long long total = guessed_profit + sub.profit;
    if (total > best.profit) {
      best.profit = total;
      best.assignment = cur;
      for (size_t t = 0; t < ids.size(); ++t) best.assignment[ids[t]] = sub.assignment[t];
    }
  };

  auto rec = [&](auto&& self, int i) -> void {
    if (++visited > guess_budget) throw resource_error("gap_ptas: guess budget exceeded");
    if (i == n) {
      evaluate();
      return;
    }
    cur[i] = kUnassigned;
    self(self, i + 1);
    for (int j = 0; j < k; ++j) {
      if (count[j] >= per_bin) continue;
      if (load[j] + inst.sizes[i][j] > inst.capacities[j]) continue;
      cur[i] = j;
      load[j] += inst.sizes[i][j];
      ++count[j];
      self(self, i + 1);
      --count[j];
      load[j] -= inst.sizes[i][j];
      cur[i] = kUnassigned;
    }
  };
  rec(rec, 0);
  return best;
}

}  // namespace gk
