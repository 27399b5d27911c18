#pragma once

#include "fewnomial/exponential_sum.hpp"
#include "fewnomial/normalize.hpp"
#include "fewnomial/strata.hpp"

#include <string>
#include <vector>

namespace fewnomial {

/// Regular cell complex given by GF(2) boundary incidences.
class CellComplex {
 public:
  CellComplex() = default;

  /// Adds a cell; every boundary entry must name an existing (dim-1)-cell.
  /// Returns the new cell's index within its dimension.
  int add_cell(int dim, std::vector<int> boundary);

  /// Highest dimension holding a cell, -1 for the empty complex.
  int top_dim() const;
  std::size_t count(int dim) const;
  const std::vector<int>& boundary(int dim, int cell) const;

  /// d o d = 0 over GF(2), checked exactly.
  bool boundary_squared_zero() const;
  long long euler_characteristic() const;

  /// Optional geometry: a point for each 0-cell, and for each higher cell the
  /// 0-cells on its boundary in cyclic order (used only for dumps).
  std::vector<Vector> positions;
  std::vector<std::vector<int>> polygons;

 private:
  std::vector<std::vector<std::vector<int>>> cells_;
};

struct BettiVector {
  std::vector<int> b;

  int sum() const;
  bool operator==(const BettiVector&) const = default;
};

/// b_k = dim ker d_k - rank d_{k+1} over GF(2). The result has at least
/// min_length entries. Throws std::logic_error if d o d != 0.
BettiVector betti(const CellComplex& complex, int min_length = 0);

/// Rank of a sparse GF(2) matrix given by columns of row indices.
int gf2_rank(std::vector<std::vector<int>> columns);

/// Sign-change roots of a one-variable sum on [lo, hi]: the grid is doubled
/// until the bracket count repeats, then each bracket is bisected to width tol.
std::vector<double> isolate_roots_1d(const ExponentialSum& sum, double lo, double hi, double tol = 1e-12);

/// PL zero set of phi over a triangulation of Delta_M with `resolution`
/// subdivisions per edge. Cells are the simplices carrying both signs; a
/// k-simplex becomes a (k-1)-cell. Requires dim in {2, 3}, resolution >= 16.
CellComplex marching_complex(const NormalizedSum& ns, const SimplexSpec& M, int resolution);

struct BettiAttempt {
  Vector M;
  int resolution = 0;
  BettiVector betti;
};

struct StableBetti {
  BettiVector betti;
  Vector M;            // smaller simplex of the agreeing pair
  int resolution = 0;  // stabilized resolution at M
  std::vector<BettiAttempt> history;
};

/// Doubles the resolution from r0 until two consecutive Betti vectors agree,
/// and inflates M by 2 until two consecutive simplices agree. Throws
/// StabilizationError when either loop exceeds max_doublings.
StableBetti betti_stable(const NormalizedSum& ns, const SimplexSpec& M, int r0 = 32, int max_doublings = 4);

/// Betti vector of Z cap Delta_M at a single resolution (dim 1 uses root isolation).
BettiVector betti_at(const NormalizedSum& ns, const SimplexSpec& M, int resolution);

/// OFF-like text: vertex positions, then one polygon or edge per top cell.
std::string dump_off(const CellComplex& complex);

}  // namespace fewnomial
