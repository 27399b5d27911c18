#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace fewnomial {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Relative singular-value cutoff used for span and pivot rank decisions.
inline constexpr double kRankTol = 1e-9;
/// Exponent vectors closer than this are treated as the same exponent.
inline constexpr double kMergeTol = 1e-10;
/// Exponent arguments beyond this magnitude switch evaluation to the
/// scaled (sign-preserving) form.
inline constexpr double kOverflowArgument = 500.0;

struct Term {
  double coefficient = 0.0;
  Vector exponent;
};

/// phi(z) = sum_i c_i exp(z . alpha_i) on R^N. Immutable once built.
class ExponentialSum {
 public:
  ExponentialSum() = default;
  explicit ExponentialSum(int ambient_dim);
  /// Throws std::invalid_argument when an exponent has the wrong length or a
  /// coefficient is not finite.
  ExponentialSum(int ambient_dim, std::vector<Term> terms);

  int ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Term& term(std::size_t i) const { return terms_.at(i); }

  std::vector<Vector> exponents() const;
  Vector coefficients() const;

 private:
  int ambient_dim_ = 0;
  std::vector<Term> terms_;
};

/// Rank of {alpha_i - alpha_0} by singular values; values below
/// tol * sigma_max count as zero.
int affine_span_dim(const std::vector<Vector>& exponents, double tol = kRankTol);

/// Sum of c_i exp(z . alpha_i). When some |z . alpha_i| exceeds
/// kOverflowArgument the largest argument is factored out and the scaled
/// value is returned; its sign is always the sign of phi(z).
double evaluate(const ExponentialSum& sum, const Vector& z);

/// sum_i |c_i exp(z . alpha_i)|, scaled exactly as evaluate() scales.
double magnitude(const ExponentialSum& sum, const Vector& z);

/// |phi(z)| / sum_i |c_i exp(z . alpha_i)|, invariant under rescaling of phi.
/// Zero for an empty sum.
double relative_residual(const ExponentialSum& sum, const Vector& z);

Vector gradient(const ExponentialSum& sum, const Vector& z);
Matrix hessian(const ExponentialSum& sum, const Vector& z);

/// D_u phi: coefficients (u . alpha_i) c_i over the same exponents, merged.
ExponentialSum directional_derivative(const ExponentialSum& sum, const Vector& u);

/// Coalesces exponents within Euclidean distance tol and drops terms that
/// cancel (|sum of group| < 1e-14 * largest |c| in the group).
ExponentialSum merge_terms(const ExponentialSum& sum, double tol = kMergeTol);

}  // namespace fewnomial
