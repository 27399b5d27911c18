#include "fewnomial/normalize.hpp"

#include <cmath>
#include <stdexcept>

namespace fewnomial {

namespace {

// Index among the differences alpha_i - alpha_0 (i >= 1) equal to e_j, or -1.
int find_unit_vector(const Matrix& diff, int j, double tol) {
  for (Eigen::Index c = 0; c < diff.cols(); ++c) {
    Vector e = Vector::Zero(diff.rows());
    e[j] = 1.0;
    if ((diff.col(c) - e).norm() <= tol) return static_cast<int>(c);
  }
  return -1;
}

}  // namespace

NormalizedSum normalize(const ExponentialSum& input, const NormalizeOptions& options) {
  const ExponentialSum raw = merge_terms(input);
  if (raw.empty()) throw std::invalid_argument("normalize: empty sum");
  const int big_n = raw.ambient_dim();
  const int terms = static_cast<int>(raw.size());
  const int n = affine_span_dim(raw.exponents(), options.tol);
  if (n == 0) throw std::invalid_argument("normalize: exponents span dimension 0, no hypersurface");

  const Vector alpha0 = raw.term(0).exponent;
  Matrix diff(big_n, terms - 1);
  for (int i = 1; i < terms; ++i) diff.col(i - 1) = raw.term(static_cast<std::size_t>(i)).exponent - alpha0;

  CoordinateMap map;
  map.translation = alpha0;
  Matrix gamma;  // n x (terms - 1): new exponents of terms 1..T-1

  bool standard = options.prefer_standard_basis && n == big_n;
  std::vector<int> unit_cols;
  if (standard) {
    for (int j = 0; j < n && standard; ++j) {
      const int c = find_unit_vector(diff, j, options.tol);
      if (c < 0) standard = false;
      unit_cols.push_back(c);
    }
  }

  if (standard) {
    map.basis = Matrix::Identity(n, n);
    map.complement = Matrix(n, 0);
    for (int c : unit_cols) map.pivots.push_back(c + 1);
    map.forward = Matrix::Identity(n, n);
    map.inverse = Matrix::Identity(n, n);
    gamma = diff;
  } else {
    Eigen::JacobiSVD<Matrix> svd(diff, Eigen::ComputeFullU);
    map.basis = svd.matrixU().leftCols(n);
    map.complement = svd.matrixU().rightCols(big_n - n);
    const Matrix beta = map.basis.transpose() * diff;  // n x (T-1)
    Eigen::ColPivHouseholderQR<Matrix> qr(beta);
    const auto& perm = qr.colsPermutation().indices();
    Matrix pivot(n, n);
    for (int j = 0; j < n; ++j) {
      map.pivots.push_back(perm[j] + 1);
      pivot.col(j) = beta.col(perm[j]);
    }
    const Vector sv = Eigen::JacobiSVD<Matrix>(pivot).singularValues();
    if (sv[n - 1] <= options.tol * sv[0]) {
      throw std::invalid_argument("normalize: degenerate pivot selection");
    }
    const Eigen::PartialPivLU<Matrix> lu(pivot);
    gamma = lu.solve(beta);
    for (int j = 0; j < n; ++j) {
      gamma.col(perm[j]) = Vector::Unit(n, j);
    }
    map.forward = pivot.transpose() * map.basis.transpose();
    map.inverse = map.basis * lu.inverse().transpose();
  }

  const int spectators = options.reduction == Reduction::ambient ? big_n - n : 0;
  if (spectators > 0) {
    Matrix fwd(big_n, big_n);
    fwd << map.forward, map.complement.transpose();
    Matrix inv(big_n, big_n);
    inv << map.inverse, map.complement;
    map.forward = fwd;
    map.inverse = inv;
  }

  const int dim = n + spectators;
  std::vector<Term> out;
  out.reserve(static_cast<std::size_t>(terms));
  out.push_back({raw.term(0).coefficient, Vector::Zero(dim)});
  for (int i = 1; i < terms; ++i) {
    Vector e = Vector::Zero(dim);
    e.head(n) = gamma.col(i - 1);
    // Snap rounding noise so pivot exponents are exactly unit vectors.
    for (int k = 0; k < n; ++k) {
      const double r = std::round(e[k]);
      if (std::abs(e[k] - r) <= 1e-13 * std::max(1.0, std::abs(r))) e[k] = r;
    }
    out.push_back({raw.term(static_cast<std::size_t>(i)).coefficient, std::move(e)});
  }

  NormalizedSum ns;
  ns.sum = ExponentialSum(dim, std::move(out));
  ns.n = n;
  ns.l = terms - n - 1;
  ns.spectators = spectators;
  ns.map = std::move(map);
  return ns;
}

}  // namespace fewnomial
