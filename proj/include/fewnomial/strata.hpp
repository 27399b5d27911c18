#pragma once

#include "fewnomial/exponential_sum.hpp"
#include "fewnomial/normalize.hpp"

#include <cstdint>
#include <vector>

namespace fewnomial {

/// Sorted subset of {0, ..., n}; index 0 is the facet sum(z) = M_0, index i > 0
/// the facet z_i = -M_i.
using Subset = std::vector<int>;

/// Delta_M = { z : z_i >= -M_i, sum_i z_i <= M_0 }.
class SimplexSpec {
 public:
  /// M = (M_0, ..., M_n); every entry must be finite and > 0.
  explicit SimplexSpec(Vector m);

  int dim() const noexcept { return static_cast<int>(m_.size()) - 1; }
  const Vector& M() const noexcept { return m_; }
  double operator[](int i) const { return m_[i]; }
  /// M_0 + sum_{i>0} M_i, the edge length in the t = z + M coordinates.
  double extent() const { return m_.sum(); }
  bool contains(const Vector& z, double tol = 0.0) const;

 private:
  Vector m_;
};

/// Affine chart w -> linear * w + offset from face coordinates onto H_S.
struct FaceChart {
  Matrix linear;               // n x m
  Vector offset;               // n
  std::vector<int> free_axes;  // ambient axis (0-based) for each face coordinate

  Vector apply(const Vector& w) const { return linear * w + offset; }
};

struct StratumSpec {
  Subset S;
  FaceChart chart;
  int eliminated_index = -1;  // 1-based j solved from the H_0 equation, -1 if 0 not in S
  ExponentialSum restricted;  // phi_S on R^(n - |S|)

  int face_dim() const { return static_cast<int>(chart.free_axes.size()); }
  bool contains_zero() const { return !S.empty() && S.front() == 0; }
};

/// All S with |S| <= n - 1, ordered by size then lexicographically.
std::vector<Subset> enumerate_strata(int n);

/// phi_S by substituting z_i = -M_i (i in S, i > 0) and, when 0 in S,
/// z_j = M_0 - sum_{k != j} z_k for the smallest j not in S. Verifies the
/// term-count bound and throws std::logic_error if it is broken.
StratumSpec restrict(const NormalizedSum& ns, const SimplexSpec& M, const Subset& S);

enum class FaceStatus { interior, boundary, exterior };

struct FaceClass {
  Subset active;
  FaceStatus status = FaceStatus::interior;
};

FaceClass face_classify(const SimplexSpec& M, const Vector& z, double tol);

/// Every M_i multiplied by factor; requires factor >= 1.
SimplexSpec inflate(const SimplexSpec& M, double factor);

/// base_i * (1 + eps * U[0,1)) from a generator seeded by (seed, attempt).
SimplexSpec generic_simplex(const Vector& base, std::uint64_t seed, int attempt, double eps = 1e-3);

/// Axis-aligned bounds of the face of Delta_M in face coordinates.
struct FaceBox {
  Vector lo;
  Vector hi;
};

FaceBox face_box(const StratumSpec& stratum, const SimplexSpec& M);

}  // namespace fewnomial
