#pragma once

// Reference computations written independently of the library code paths:
// finite differences, exact integer sums, long-double bound formulas, and
// the curated instances.

#include "fewnomial/exponential_sum.hpp"
#include "fewnomial/random.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

using fewnomial::ExponentialSum;
using fewnomial::Matrix;
using fewnomial::Term;
using fewnomial::Vector;

inline Vector fd_gradient(const ExponentialSum& f, const Vector& z, double h) {
  Vector g(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    Vector a = z, b = z;
    a[i] += h;
    b[i] -= h;
    g[i] = (fewnomial::evaluate(f, a) - fewnomial::evaluate(f, b)) / (2 * h);
  }
  return g;
}

inline Matrix fd_hessian(const ExponentialSum& f, const Vector& z, double h) {
  Matrix H(z.size(), z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    Vector a = z, b = z;
    a[i] += h;
    b[i] -= h;
    H.col(i) = (fewnomial::gradient(f, a) - fewnomial::gradient(f, b)) / (2 * h);
  }
  return H;
}

// Double-free direct evaluation in long double, no overflow handling.
inline long double direct_value(const ExponentialSum& f, const Vector& z) {
  long double s = 0;
  for (const auto& t : f.terms()) s += static_cast<long double>(t.coefficient) * std::exp(static_cast<long double>(t.exponent.dot(z)));
  return s;
}

using i128 = __int128;

inline i128 binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  i128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline i128 ipow(i128 b, int e) {
  i128 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// sum_i binom(n, i) i^l with 0^0 = 1, exactly.
inline i128 binomial_power_sum(int n, int l) {
  i128 s = 0;
  for (int i = 0; i <= n; ++i) s += binom(n, i) * (i == 0 ? (l == 0 ? 1 : 0) : ipow(i, l));
  return s;
}

inline long double constant() { return (std::exp(2.0L) + 3.0L) / 4.0L; }

inline long double theorem1(int n, int l) {
  return constant() * std::pow(2.0L, l * (l - 1) / 2) * static_cast<long double>(binomial_power_sum(n, l));
}

inline long double simple(int n, int l) {
  return 4.0L * constant() * std::pow(2.0L, l * (l - 1) / 2) * std::pow(static_cast<long double>(n), l) *
         std::pow(2.0L, n - 3);
}

inline i128 khovanskii(int n, int l) {
  const int k = n + l;
  return ipow(2 * n * n - n + 1, k) * ipow(2 * n, n - 1) * ipow(2, k * (k - 1) / 2);
}

inline long double khovanskii_approx(int n, int l) {
  const int k = n + l;
  return std::pow(static_cast<long double>(2 * n * n - n + 1), k) * std::pow(2.0L * n, n - 1) *
         std::pow(2.0L, k * (k - 1) / 2);
}

inline i128 milnor(int n, int d) { return d * ipow(2 * d - 1, n); }

inline double rel(long double a, long double b) {
  return static_cast<double>(std::fabs(a - b) / std::max(std::fabs(a), std::fabs(b)));
}

inline ExponentialSum make(int n, const std::vector<std::vector<double>>& ex, const std::vector<double>& co) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < ex.size(); ++i) {
    Vector a(n);
    for (int j = 0; j < n; ++j) a[j] = ex[i][static_cast<std::size_t>(j)];
    terms.push_back({co[i], a});
  }
  return ExponentialSum(n, std::move(terms));
}

// x^2 - 2x + y^2 - 2y + 1.5 on the positive quadrant.
inline ExponentialSum ellipse() {
  return make(2, {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {0, 2}}, {1.5, -2, -2, 1, 1});
}

// (x-1)^2 + (y-1)^2 + (z-1)^2 - 0.25 expanded.
inline ExponentialSum sphere() {
  return make(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}},
              {2.75, -2, -2, -2, 1, 1, 1});
}

inline ExponentialSum segment() { return make(2, {{0, 0}, {1, 1}}, {-1, 1}); }

inline Vector random_vector(fewnomial::Rng& rng, int n, double lo, double hi) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = rng.uniform(lo, hi);
  return v;
}

}  // namespace oracle
