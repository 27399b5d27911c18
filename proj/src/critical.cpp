#include "fewnomial/critical.hpp"

#include "fewnomial/error.hpp"
#include "fewnomial/random.hpp"

#include <cmath>
#include <stdexcept>

namespace fewnomial {

Direction Direction::random(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("Direction::random: n >= 1 required");
  Rng rng(mix_seed(seed, 0xD1EC7ULL));
  Vector v(n);
  do {
    for (int i = 0; i < n; ++i) v[i] = rng.normal();
  } while (v.norm() < 1e-8);
  return {v / v.norm(), seed};
}

Direction Direction::from_vector(const Vector& v, std::uint64_t seed) {
  const double norm = v.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) throw std::invalid_argument("Direction: zero or non-finite vector");
  return {v / norm, seed};
}

Vector restrict_direction(const Vector& u, const StratumSpec& stratum) {
  if (u.size() != stratum.chart.linear.rows()) throw std::invalid_argument("restrict_direction: dimension mismatch");
  return stratum.chart.linear.transpose() * u;
}

Vector inward_normal(int i, int n) {
  if (i < 0 || i > n) throw std::invalid_argument("inward_normal: index out of range");
  if (i == 0) return Vector::Constant(n, -1.0 / std::sqrt(static_cast<double>(n)));
  return Vector::Unit(n, i - 1);
}

std::vector<Vector> cone_generators(const Vector& grad, const std::vector<Vector>& inward_normals) {
  const auto n = grad.size();
  const auto s = static_cast<Eigen::Index>(inward_normals.size());
  if (s < 1) throw std::invalid_argument("cone_generators: need at least one active facet");
  if (s + 1 > n) throw std::invalid_argument("cone_generators: too many active facets");
  const double gnorm = grad.norm();
  if (!(gnorm > 0.0)) throw GenericityError(GenericityError::Target::simplex, "cone_generators: vanishing gradient");

  Matrix a(s + 1, n);
  a.row(0) = grad.transpose() / gnorm;
  for (Eigen::Index k = 0; k < s; ++k) a.row(k + 1) = inward_normals[static_cast<std::size_t>(k)].transpose();

  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector sv = svd.singularValues();
  if (sv[s] <= 1e-10 * sv[0]) {
    throw GenericityError(GenericityError::Target::simplex, "face not transversal to the hypersurface");
  }
  std::vector<Vector> out;
  for (Eigen::Index k = 0; k < s; ++k) {
    const Vector rhs = Vector::Unit(s + 1, k + 1);
    Vector w = svd.solve(rhs);
    if ((a * w - rhs).lpNorm<Eigen::Infinity>() > 1e-9) {
      throw GenericityError(GenericityError::Target::simplex, "cone generator system inconsistent");
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Vector> cone_generators(const Vector& z, const Subset& S, const NormalizedSum& ns) {
  std::vector<Vector> normals;
  for (int i : S) normals.push_back(inward_normal(i, ns.dim()));
  return cone_generators(gradient(ns.sum, z), normals);
}

bool is_contributing(const Vector& u, const Subset& S, const std::vector<Vector>& generators, double tol) {
  if (S.empty()) return true;
  if (generators.size() != S.size()) throw std::invalid_argument("is_contributing: one generator per active facet");
  bool all_positive = true;
  for (const auto& w : generators) {
    const double d = u.dot(w);
    if (std::abs(d) <= tol * w.norm()) {
      throw GenericityError(GenericityError::Target::direction, "Morse function flat along a normal cone generator");
    }
    if (d < 0) all_positive = false;
  }
  return all_positive;
}

int morse_index(const ExponentialSum& restricted, const Vector& w, const Vector& u_face) {
  const auto m = w.size();
  if (m <= 1) return 0;
  const Vector g = gradient(restricted, w);
  const double gg = g.squaredNorm();
  if (!(gg > 0.0)) throw GenericityError(GenericityError::Target::simplex, "morse_index: singular point of Z_S");
  const double mu = u_face.dot(g) / gg;
  const Matrix p = householder_complement(g);
  const Matrix k = p.transpose() * (-mu * hessian(restricted, w)) * p;
  const Vector eig = Eigen::SelfAdjointEigenSolver<Matrix>(k).eigenvalues();
  const double radius = eig.cwiseAbs().maxCoeff();
  int negative = 0;
  for (Eigen::Index i = 0; i < eig.size(); ++i) {
    if (!(radius > 0.0) || std::abs(eig[i]) < 1e-8 * radius) {
      throw GenericityError(GenericityError::Target::direction, "degenerate critical point");
    }
    if (eig[i] < 0) ++negative;
  }
  return negative;
}

int CensusReport::contributing_on_zero_strata() const {
  int c = 0;
  for (const auto& st : strata) {
    if (st.S.empty() || st.S.front() != 0) continue;
    for (const auto& r : st.records) c += r.contributing ? 1 : 0;
  }
  return c;
}

}  // namespace fewnomial
