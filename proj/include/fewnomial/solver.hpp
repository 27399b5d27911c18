#pragma once

#include "fewnomial/exponential_sum.hpp"
#include "fewnomial/strata.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fewnomial {

/// Orthonormal basis of u^perp as the last m-1 columns of the Householder
/// reflection sending u to |u| e_1. Returns an m x (m-1) matrix.
Matrix householder_complement(const Vector& u);

/// [phi_S, D_{v_1} phi_S, ..., D_{v_{m-1}} phi_S] for an orthonormal basis v of
/// u_face^perp. Its zeros are the critical points of L_u on Z_S.
struct CriticalSystem {
  std::vector<ExponentialSum> equations;
  Vector u_face;
  Matrix complement;  // m x (m-1), columns v_k

  int dim() const { return static_cast<int>(u_face.size()); }
  Vector values(const Vector& w) const;
  Matrix jacobian(const Vector& w) const;
  /// max over equations of relative_residual().
  double residual(const Vector& w) const;
};

/// Throws GenericityError(direction) when u_face vanishes on this face.
CriticalSystem critical_system(const StratumSpec& stratum, const Vector& u_face);

struct SolveConfig {
  int starts = 0;          // 0 means 200 * m^2
  double margin = 0.1;     // box inflation, as a fraction of each side
  double res_tol = 1e-9;
  double dedupe = 1e-6;
  double polish_tol = 1e-11;
  int max_iter = 200;
  std::uint64_t stream = 0;  // Cranley-Patterson rotation of the Halton starts
};

int default_starts(int m);

struct Root {
  Vector w;
  double residual = 0.0;
  double jacobian_min_sv = 0.0;
  double jacobian_max_sv = 0.0;
};

struct SolveResult {
  std::vector<Root> roots;
  std::vector<std::string> warnings;
  int starts = 0;
};

/// Damped Newton from quasi-random starts in the inflated box. Roots are
/// deduplicated, polished, and kept only inside the inflated box.
SolveResult solve_multistart(const CriticalSystem& system, const FaceBox& box, const SolveConfig& cfg);

/// Continues a previous multistart run with starts [first, first + count) of
/// the same quasi-random sequence, merging new roots into result.
void extend_multistart(const CriticalSystem& system, const FaceBox& box, const SolveConfig& cfg, int first,
                       int count, SolveResult& result);

}  // namespace fewnomial
