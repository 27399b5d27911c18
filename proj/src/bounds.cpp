#include "fewnomial/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fewnomial {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

double choose2(int k) { return 0.5 * static_cast<double>(k) * static_cast<double>(k - 1); }

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// Below this the value is formed directly so small integer results stay exact.
constexpr double kLinearLimit = 700.0;

BoundValue from_log(double log_value, double direct) {
  if (log_value < kLinearLimit) return {direct, log_value};
  return {std::numeric_limits<double>::infinity(), log_value};
}

double pow_int(double base, int e) { return std::pow(base, static_cast<double>(e)); }

}  // namespace

double bs_constant() { return (std::exp(2.0) + 3.0) / 4.0; }

long long strict_integer_cap(double value) {
  if (!std::isfinite(value)) return std::numeric_limits<long long>::max();
  const double f = std::floor(value);
  return static_cast<long long>(f == value ? f - 1.0 : f);
}

double log_binomial_power_sum(int n, int l) {
  require(n >= 0 && l >= 0, "log_binomial_power_sum: n, l must be non-negative");
  // log-sum-exp over i; the i = 0 term is 1 only when l = 0.
  std::vector<double> logs;
  for (int i = (l == 0 ? 0 : 1); i <= n; ++i) {
    logs.push_back(log_binomial(n, i) + (i == 0 ? 0.0 : l * std::log(static_cast<double>(i))));
  }
  double top = -std::numeric_limits<double>::infinity();
  for (double v : logs) top = std::max(top, v);
  double acc = 0.0;
  for (double v : logs) acc += std::exp(v - top);
  return top + std::log(acc);
}

BoundValue khovanskii_bound(int n, int l) {
  require(n >= 1 && l >= 0, "khovanskii_bound: need n >= 1, l >= 0");
  const double base = 2.0 * n * n - n + 1.0;
  const double log_v = (n + l) * std::log(base) + (n - 1) * std::log(2.0 * n) + choose2(n + l) * kLn2;
  if (log_v >= kLinearLimit) return from_log(log_v, 0.0);
  return {pow_int(base, n + l) * pow_int(2.0 * n, n - 1) * std::exp2(choose2(n + l)), log_v};
}

BoundValue theorem1_bound(int n, int l) {
  require(n >= 1 && l >= 0, "theorem1_bound: need n >= 1, l >= 0");
  const double log_sum = log_binomial_power_sum(n, l);
  const double log_v = std::log(bs_constant()) + choose2(l) * kLn2 + log_sum;
  if (log_v >= kLinearLimit) return from_log(log_v, 0.0);
  double sum = 0.0;
  double binom = 1.0;
  for (int i = 0; i <= n; ++i) {
    sum += binom * (i == 0 ? (l == 0 ? 1.0 : 0.0) : pow_int(i, l));
    binom = binom * (n - i) / (i + 1);
  }
  return {bs_constant() * std::exp2(choose2(l)) * sum, log_v};
}

BoundValue simple_bound(int n, int l) {
  require(n >= 1, "simple_bound: need n >= 1");
  if (l < 1) {
    throw std::invalid_argument(
        "simple_bound: l = 0 is outside the range where the simpler expression dominates "
        "the sharp bound (it is derived from the l = 1 case)");
  }
  const double log_v = std::log(4.0 * bs_constant()) + choose2(l) * kLn2 + l * std::log(static_cast<double>(n)) +
                       (n - 3) * kLn2;
  if (log_v >= kLinearLimit) return from_log(log_v, 0.0);
  return {4.0 * bs_constant() * std::exp2(choose2(l)) * pow_int(n, l) * std::exp2(n - 3.0), log_v};
}

BoundValue bs_system_bound(int n, int l) {
  require(n >= 1 && l >= 0, "bs_system_bound: need n >= 1, l >= 0");
  const double log_v = std::log(bs_constant()) + choose2(l) * kLn2 + l * std::log(static_cast<double>(n));
  if (log_v >= kLinearLimit) return from_log(log_v, 0.0);
  return {bs_constant() * std::exp2(choose2(l)) * pow_int(n, l), log_v};
}

BoundValue per_stratum_bound(int n, int s, bool zero_in_s, int l) {
  require(n >= 1 && l >= 0, "per_stratum_bound: need n >= 1, l >= 0");
  if (s < 0 || s >= n) {
    throw std::invalid_argument("per_stratum_bound: need 0 <= s <= n - 1, got s = " + std::to_string(s));
  }
  // Eliminating with the H_0 equation adds one exponent: l -> l + 1.
  return bs_system_bound(n - s, zero_in_s ? l + 1 : l);
}

BoundValue milnor_bound(int n, int d) {
  require(n >= 1 && d >= 1, "milnor_bound: need n, d >= 1");
  const double log_v = std::log(static_cast<double>(d)) + n * std::log(2.0 * d - 1.0);
  if (log_v >= kLinearLimit) return from_log(log_v, 0.0);
  return {d * pow_int(2.0 * d - 1.0, n), log_v};
}

BoundReport compare_bounds(int n, int l, std::optional<int> d) {
  BoundReport r;
  r.n = n;
  r.l = l;
  r.khovanskii = khovanskii_bound(n, l);
  r.theorem1 = theorem1_bound(n, l);
  r.theorem1_cap = strict_integer_cap(r.theorem1.value);
  if (l >= 1) r.simple = simple_bound(n, l);
  r.bs_system = bs_system_bound(n, l);
  if (d) {
    r.d = d;
    r.milnor = milnor_bound(n, *d);
  }
  for (int s = 0; s < n; ++s) {
    for (bool z : {false, true}) r.per_stratum.push_back({s, z, per_stratum_bound(n, s, z, l)});
  }
  return r;
}

}  // namespace fewnomial
