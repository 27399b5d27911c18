#pragma once

#include <optional>
#include <vector>

namespace fewnomial {

/// (e^2 + 3) / 4, the leading constant of the fewnomial system bound.
double bs_constant();

/// A bound value together with its natural logarithm. value is +inf when it
/// does not fit in a double; log_value is always finite.
struct BoundValue {
  double value = 0.0;
  double log_value = 0.0;
};

BoundValue khovanskii_bound(int n, int l);
BoundValue theorem1_bound(int n, int l);
/// Requires l >= 1; throws std::invalid_argument for l = 0.
BoundValue simple_bound(int n, int l);
BoundValue bs_system_bound(int n, int l);
/// Critical points of L_u on Z_S, |S| = s. Requires 0 <= s <= n - 1.
BoundValue per_stratum_bound(int n, int s, bool zero_in_s, int l);
BoundValue milnor_bound(int n, int d);

/// Largest integer strictly below value (the theorem bound is strict).
long long strict_integer_cap(double value);

/// log of sum_{i=0}^{n} binom(n, i) i^l with 0^0 = 1.
double log_binomial_power_sum(int n, int l);

struct StratumBoundRow {
  int s = 0;
  bool zero_in_s = false;
  BoundValue bound;
};

struct BoundReport {
  int n = 0;
  int l = 0;
  BoundValue khovanskii;
  BoundValue theorem1;
  long long theorem1_cap = 0;
  std::optional<BoundValue> simple;  // absent when l = 0
  BoundValue bs_system;
  std::optional<int> d;
  std::optional<BoundValue> milnor;
  std::vector<StratumBoundRow> per_stratum;
};

BoundReport compare_bounds(int n, int l, std::optional<int> d = std::nullopt);

}  // namespace fewnomial
