#pragma once

#include "fewnomial/exponential_sum.hpp"
#include "fewnomial/normalize.hpp"
#include "fewnomial/solver.hpp"
#include "fewnomial/strata.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fewnomial {

/// Unit vector u defining the linear Morse function L_u(z) = u . z.
struct Direction {
  Vector u;
  std::uint64_t seed = 0;

  /// Uniform on the unit sphere of R^n, drawn from seed.
  static Direction random(int n, std::uint64_t seed);
  /// Normalizes v; throws std::invalid_argument for v = 0.
  static Direction from_vector(const Vector& v, std::uint64_t seed = 0);
};

/// Pullback (linear chart)^T u, so L_u(chart(w)) = u_face . w + u . offset.
Vector restrict_direction(const Vector& u, const StratumSpec& stratum);

/// Inward unit normal of facet i of Delta_M in R^n: e_i for i > 0 and
/// -(1, ..., 1) / sqrt(n) for i = 0.
Vector inward_normal(int i, int n);

/// For each k in S the vector w_k with grad . w = 0, a_j . w = 0 (j in S, j != k)
/// and a_k . w = 1, taken with minimal norm. Throws GenericityError(simplex)
/// when the constraints are dependent (the face is not transversal to Z).
std::vector<Vector> cone_generators(const Vector& grad, const std::vector<Vector>& inward_normals);
std::vector<Vector> cone_generators(const Vector& z, const Subset& S, const NormalizedSum& ns);

/// True iff u . w_k > 0 for every generator (L_u minimal over the normal
/// slice at p); always true for S empty. Throws GenericityError(direction)
/// when some |u . w_k| <= tol |w_k|.
bool is_contributing(const Vector& u, const Subset& S, const std::vector<Vector>& generators, double tol = 1e-9);

/// Number of negative eigenvalues of -mu Hess(phi_S) on ker grad phi_S where
/// u_face = mu grad phi_S. Throws GenericityError(direction) on a degenerate
/// critical point.
int morse_index(const ExponentialSum& restricted, const Vector& w, const Vector& u_face);

struct CriticalRecord {
  Subset S;
  Vector z;
  Vector face_coords;
  double value = 0.0;
  double residual = 0.0;
  double jacobian_min_sv = 0.0;
  int morse_index = 0;
  bool contributing = false;
  std::vector<double> cone_derivatives;
};

struct StratumCensus {
  Subset S;
  int face_dim = 0;
  int terms = 0;
  double bound = 0.0;
  int root_count = 0;   // all roots found in the inflated face box
  bool within_bound = true;
  bool stable = true;
  std::vector<int> starts_history;
  std::vector<int> count_history;
  std::vector<CriticalRecord> records;  // roots in the relative interior of the face
  std::vector<std::string> warnings;
};

struct CensusConfig {
  SolveConfig solve;
  bool stability_check = true;
  int max_stability_rounds = 3;
  int max_direction_redraws = 20;
  int max_simplex_redraws = 20;
  double face_tol = 1e-9;
  double genericity_tol = 1e-9;
  double nondegeneracy_tol = 1e-10;  // relative smallest singular value of the system Jacobian
  double distinct_value_tol = 1e-8;
};

struct CensusReport {
  Direction direction;
  std::uint64_t requested_seed = 0;
  int direction_redraws = 0;
  int simplex_redraws = 0;
  Vector M;
  int n = 0;
  int l = 0;
  int dim = 0;
  std::optional<double> shift_lambda;
  std::vector<StratumCensus> strata;
  int contributing_count = 0;
  int record_count = 0;
  bool stable = true;
  std::vector<std::string> diagnostics;

  /// Contributing records on strata containing 0.
  int contributing_on_zero_strata() const;
};

/// One census pass with a fixed direction; throws GenericityError on any
/// genericity diagnostic and BoundViolation when a stratum exceeds its bound.
CensusReport census_once(const NormalizedSum& ns, const SimplexSpec& M, const Direction& u, const CensusConfig& cfg);

/// census_once with up to cfg.max_direction_redraws fresh directions on
/// direction-genericity failures. Simplex failures propagate.
CensusReport morse_census(const NormalizedSum& ns, const SimplexSpec& M, const Direction& u, const CensusConfig& cfg);

/// morse_census on generic_simplex(base, seed, k), re-drawing M on simplex
/// genericity failures up to cfg.max_simplex_redraws times.
CensusReport census_generic(const NormalizedSum& ns, const Vector& base_M, std::uint64_t seed, const CensusConfig& cfg);

struct ShiftResult {
  double lambda = 0.0;
  int doublings = 0;
  CensusReport census;
};

/// Doubles lambda from 1 until the census for u + lambda (1, ..., 1) has no
/// contributing record on a stratum containing 0. Throws GenericityExhausted
/// after max_doublings.
ShiftResult choose_shift(const NormalizedSum& ns, const SimplexSpec& M, const Direction& u, const CensusConfig& cfg,
                         int max_doublings = 40);

}  // namespace fewnomial
