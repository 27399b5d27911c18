#include "fewnomial/exponential_sum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fewnomial {

namespace {

void check_point(const ExponentialSum& sum, const Vector& z) {
  if (z.size() != sum.ambient_dim()) {
    throw std::invalid_argument("point has dimension " + std::to_string(z.size()) +
                                ", sum expects " + std::to_string(sum.ambient_dim()));
  }
  if (!z.allFinite()) throw std::invalid_argument("non-finite coordinates");
}

// Arguments z . alpha_i and the shift subtracted from them before exp().
struct Arguments {
  std::vector<double> values;
  double shift = 0.0;
};

Arguments arguments(const ExponentialSum& sum, const Vector& z) {
  Arguments a;
  a.values.reserve(sum.size());
  double largest = -std::numeric_limits<double>::infinity();
  double extreme = 0.0;
  for (const auto& t : sum.terms()) {
    const double v = t.exponent.dot(z);
    a.values.push_back(v);
    largest = std::max(largest, v);
    extreme = std::max(extreme, std::abs(v));
  }
  if (extreme > kOverflowArgument) a.shift = largest;
  return a;
}

}  // namespace

ExponentialSum::ExponentialSum(int ambient_dim) : ambient_dim_(ambient_dim) {
  if (ambient_dim < 0) throw std::invalid_argument("negative ambient dimension");
}

ExponentialSum::ExponentialSum(int ambient_dim, std::vector<Term> terms)
    : ambient_dim_(ambient_dim), terms_(std::move(terms)) {
  if (ambient_dim < 0) throw std::invalid_argument("negative ambient dimension");
  for (const auto& t : terms_) {
    if (t.exponent.size() != ambient_dim) {
      throw std::invalid_argument("exponent of length " + std::to_string(t.exponent.size()) +
                                  " in a sum on R^" + std::to_string(ambient_dim));
    }
    if (!std::isfinite(t.coefficient) || !t.exponent.allFinite()) {
      throw std::invalid_argument("non-finite term");
    }
  }
}

std::vector<Vector> ExponentialSum::exponents() const {
  std::vector<Vector> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.exponent);
  return out;
}

Vector ExponentialSum::coefficients() const {
  Vector c(static_cast<Eigen::Index>(terms_.size()));
  for (std::size_t i = 0; i < terms_.size(); ++i) c[static_cast<Eigen::Index>(i)] = terms_[i].coefficient;
  return c;
}

int affine_span_dim(const std::vector<Vector>& exponents, double tol) {
  if (exponents.empty()) throw std::invalid_argument("affine_span_dim: empty exponent list");
  if (!(tol > 0)) throw std::invalid_argument("affine_span_dim: tol must be positive");
  const auto dim = exponents.front().size();
  if (exponents.size() == 1 || dim == 0) return 0;
  Matrix diff(dim, static_cast<Eigen::Index>(exponents.size() - 1));
  for (std::size_t i = 1; i < exponents.size(); ++i) {
    if (exponents[i].size() != dim) throw std::invalid_argument("affine_span_dim: ragged exponents");
    diff.col(static_cast<Eigen::Index>(i - 1)) = exponents[i] - exponents.front();
  }
  const Vector sv = Eigen::JacobiSVD<Matrix>(diff).singularValues();
  if (sv.size() == 0 || sv[0] == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > tol * sv[0]) ++rank;
  }
  return rank;
}

double evaluate(const ExponentialSum& sum, const Vector& z) {
  check_point(sum, z);
  const Arguments a = arguments(sum, z);
  double value = 0.0;
  for (std::size_t i = 0; i < sum.size(); ++i) {
    value += sum.terms()[i].coefficient * std::exp(a.values[i] - a.shift);
  }
  return value;
}

double magnitude(const ExponentialSum& sum, const Vector& z) {
  check_point(sum, z);
  const Arguments a = arguments(sum, z);
  double value = 0.0;
  for (std::size_t i = 0; i < sum.size(); ++i) {
    value += std::abs(sum.terms()[i].coefficient) * std::exp(a.values[i] - a.shift);
  }
  return value;
}

double relative_residual(const ExponentialSum& sum, const Vector& z) {
  check_point(sum, z);
  if (sum.empty()) return 0.0;
  // Always factor out the largest argument; the ratio is scale free.
  Arguments a = arguments(sum, z);
  a.shift = *std::max_element(a.values.begin(), a.values.end());
  double value = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < sum.size(); ++i) {
    const double e = sum.terms()[i].coefficient * std::exp(a.values[i] - a.shift);
    value += e;
    scale += std::abs(e);
  }
  return scale > 0.0 ? std::abs(value) / scale : 0.0;
}

Vector gradient(const ExponentialSum& sum, const Vector& z) {
  check_point(sum, z);
  Vector g = Vector::Zero(sum.ambient_dim());
  for (const auto& t : sum.terms()) {
    g += (t.coefficient * std::exp(t.exponent.dot(z))) * t.exponent;
  }
  return g;
}

Matrix hessian(const ExponentialSum& sum, const Vector& z) {
  check_point(sum, z);
  Matrix h = Matrix::Zero(sum.ambient_dim(), sum.ambient_dim());
  for (const auto& t : sum.terms()) {
    h.noalias() += (t.coefficient * std::exp(t.exponent.dot(z))) * (t.exponent * t.exponent.transpose());
  }
  return h;
}

ExponentialSum directional_derivative(const ExponentialSum& sum, const Vector& u) {
  if (u.size() != sum.ambient_dim()) throw std::invalid_argument("direction has wrong dimension");
  std::vector<Term> terms;
  terms.reserve(sum.size());
  for (const auto& t : sum.terms()) {
    double slope = u.dot(t.exponent);
    // u orthogonal to alpha up to rounding means the term is constant along u.
    if (std::abs(slope) <= 1e-14 * u.norm() * t.exponent.norm()) slope = 0.0;
    if (slope != 0.0) terms.push_back({slope * t.coefficient, t.exponent});
  }
  return merge_terms(ExponentialSum(sum.ambient_dim(), std::move(terms)));
}

ExponentialSum merge_terms(const ExponentialSum& sum, double tol) {
  if (tol < 0) throw std::invalid_argument("merge_terms: negative tolerance");
  struct Group {
    Vector exponent;
    double coefficient;
    double largest;
  };
  std::vector<Group> groups;
  for (const auto& t : sum.terms()) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) {
      return (g.exponent - t.exponent).norm() <= tol;
    });
    if (it == groups.end()) {
      groups.push_back({t.exponent, t.coefficient, std::abs(t.coefficient)});
    } else {
      it->coefficient += t.coefficient;
      it->largest = std::max(it->largest, std::abs(t.coefficient));
    }
  }
  std::vector<Term> terms;
  for (auto& g : groups) {
    if (g.coefficient == 0.0 || std::abs(g.coefficient) < 1e-14 * g.largest) continue;
    terms.push_back({g.coefficient, std::move(g.exponent)});
  }
  return ExponentialSum(sum.ambient_dim(), std::move(terms));
}

}  // namespace fewnomial
