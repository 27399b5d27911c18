#pragma once

#include "fewnomial/exponential_sum.hpp"

#include <vector>

namespace fewnomial {

/// How the directions orthogonal to the exponent span are treated.
///  cylinder: dropped, the normalized sum lives in R^n.
///  ambient:  kept as trailing spectator coordinates, the normalized sum lives
///            in R^N and its zero set is the full cylinder Z' x R^(N-n).
enum class Reduction { cylinder, ambient };

struct NormalizeOptions {
  double tol = kRankTol;
  Reduction reduction = Reduction::cylinder;
  /// Keep the identity chart when the translated exponents already contain
  /// the standard basis of R^N. Disable to force pivoted-QR selection.
  bool prefer_standard_basis = true;
};

/// Linear change of coordinates w = forward * z taking the exponent span to
/// the first n chart coordinates, with exponents alpha_pivot(j) - alpha_0
/// sent to e_j.
struct CoordinateMap {
  Vector translation;        // alpha_0, length N
  Matrix basis;              // N x n, orthonormal columns spanning the exponent span
  Matrix complement;         // N x (N - n), orthonormal; used only for Reduction::ambient
  std::vector<int> pivots;   // term indices sent to e_1..e_n
  Matrix forward;            // dim x N
  Matrix inverse;            // N x dim, forward * inverse = I

  Vector to_chart(const Vector& z) const { return forward * z; }
  Vector from_chart(const Vector& w) const { return inverse * w; }
  /// raw(z) = exp(z . alpha_0) * normalized(to_chart(z)); this is log of that factor.
  double log_factor(const Vector& z) const { return z.dot(translation); }
};

/// Exponential sum with alpha_0 = 0 and e_1..e_n among its exponents.
struct NormalizedSum {
  ExponentialSum sum;   // ambient_dim = n + spectators
  int n = 0;            // affine span dimension
  int l = 0;            // size() - n - 1
  int spectators = 0;   // trailing coordinates no exponent depends on
  CoordinateMap map;

  int dim() const noexcept { return sum.ambient_dim(); }
};

/// Raises std::invalid_argument for an empty sum, a zero-dimensional span
/// (no hypersurface), or when every pivot candidate is singular within tol.
NormalizedSum normalize(const ExponentialSum& raw, const NormalizeOptions& options = {});

}  // namespace fewnomial
