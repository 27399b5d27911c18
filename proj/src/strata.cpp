#include "fewnomial/strata.hpp"

#include "fewnomial/random.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fewnomial {

SimplexSpec::SimplexSpec(Vector m) : m_(std::move(m)) {
  if (m_.size() < 2) throw std::invalid_argument("SimplexSpec: need M_0 and at least one M_i");
  for (Eigen::Index i = 0; i < m_.size(); ++i) {
    if (!std::isfinite(m_[i]) || !(m_[i] > 0.0)) {
      throw std::invalid_argument("SimplexSpec: every M_i must be positive and finite");
    }
  }
}

bool SimplexSpec::contains(const Vector& z, double tol) const {
  if (z.size() != dim()) throw std::invalid_argument("SimplexSpec::contains: dimension mismatch");
  for (int i = 1; i <= dim(); ++i) {
    if (z[i - 1] < -m_[i] - tol) return false;
  }
  return z.sum() <= m_[0] + tol;
}

std::vector<Subset> enumerate_strata(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_strata: n >= 1 required");
  std::vector<Subset> out;
  for (int size = 0; size <= n - 1; ++size) {
    // Lexicographic combinations of {0..n} of the given size.
    Subset s(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) s[static_cast<std::size_t>(i)] = i;
    while (true) {
      out.push_back(s);
      int i = size - 1;
      while (i >= 0 && s[static_cast<std::size_t>(i)] == n - size + 1 + i) --i;
      if (i < 0) break;
      ++s[static_cast<std::size_t>(i)];
      for (int k = i + 1; k < size; ++k) s[static_cast<std::size_t>(k)] = s[static_cast<std::size_t>(k - 1)] + 1;
    }
  }
  return out;
}

StratumSpec restrict(const NormalizedSum& ns, const SimplexSpec& M, const Subset& S) {
  const int n = ns.dim();
  if (M.dim() != n) throw std::invalid_argument("restrict: simplex dimension differs from the sum");
  if (static_cast<int>(S.size()) > n - 1) throw std::invalid_argument("restrict: |S| must be <= n - 1");
  if (!std::is_sorted(S.begin(), S.end()) || std::adjacent_find(S.begin(), S.end()) != S.end()) {
    throw std::invalid_argument("restrict: S must be sorted without repeats");
  }
  for (int i : S) {
    if (i < 0 || i > n) throw std::invalid_argument("restrict: index out of range");
  }
  const bool zero = !S.empty() && S.front() == 0;

  StratumSpec st;
  st.S = S;
  for (int k = 1; k <= n; ++k) {
    if (!std::binary_search(S.begin(), S.end(), k)) st.chart.free_axes.push_back(k - 1);
  }
  if (zero) {
    st.eliminated_index = st.chart.free_axes.front() + 1;
    st.chart.free_axes.erase(st.chart.free_axes.begin());
  }
  const int m = st.face_dim();

  st.chart.linear = Matrix::Zero(n, m);
  st.chart.offset = Vector::Zero(n);
  for (int q = 0; q < m; ++q) st.chart.linear(st.chart.free_axes[static_cast<std::size_t>(q)], q) = 1.0;
  double pinned = 0.0;
  for (int i : S) {
    if (i == 0) continue;
    st.chart.offset[i - 1] = -M[i];
    pinned += M[i];
  }
  if (zero) {
    const int j = st.eliminated_index - 1;
    st.chart.linear.row(j).setConstant(-1.0);
    st.chart.offset[j] = M[0] + pinned;
  }

  std::vector<Term> terms;
  terms.reserve(ns.sum.size());
  for (const auto& t : ns.sum.terms()) {
    terms.push_back({t.coefficient * std::exp(t.exponent.dot(st.chart.offset)),
                     st.chart.linear.transpose() * t.exponent});
  }
  st.restricted = merge_terms(ExponentialSum(m, std::move(terms)));

  const std::size_t allowed = static_cast<std::size_t>(m + ns.l + 1 + (zero ? 1 : 0));
  if (st.restricted.size() > allowed) {
    throw std::logic_error("restrict: stratum has " + std::to_string(st.restricted.size()) +
                           " terms, at most " + std::to_string(allowed) + " expected");
  }
  return st;
}

FaceClass face_classify(const SimplexSpec& M, const Vector& z, double tol) {
  if (z.size() != M.dim()) throw std::invalid_argument("face_classify: dimension mismatch");
  FaceClass fc;
  bool outside = false;
  const double sum = z.sum();
  if (std::abs(sum - M[0]) <= tol) fc.active.push_back(0);
  if (sum > M[0] + tol) outside = true;
  for (int i = 1; i <= M.dim(); ++i) {
    const double gap = z[i - 1] + M[i];
    if (std::abs(gap) <= tol) fc.active.push_back(i);
    if (gap < -tol) outside = true;
  }
  fc.status = outside ? FaceStatus::exterior : (fc.active.empty() ? FaceStatus::interior : FaceStatus::boundary);
  return fc;
}

SimplexSpec inflate(const SimplexSpec& M, double factor) {
  if (!(factor >= 1.0) || !std::isfinite(factor)) throw std::invalid_argument("inflate: factor must be >= 1");
  return SimplexSpec(M.M() * factor);
}

SimplexSpec generic_simplex(const Vector& base, std::uint64_t seed, int attempt, double eps) {
  Rng rng(mix_seed(seed, 0x5109ULL + static_cast<std::uint64_t>(attempt)));
  Vector m = base;
  for (Eigen::Index i = 0; i < m.size(); ++i) m[i] *= 1.0 + eps * rng.uniform();
  return SimplexSpec(m);
}

FaceBox face_box(const StratumSpec& stratum, const SimplexSpec& M) {
  const int m = stratum.face_dim();
  FaceBox box{Vector(m), Vector(m)};
  const double total = M.extent();
  for (int q = 0; q < m; ++q) {
    const int axis = stratum.chart.free_axes[static_cast<std::size_t>(q)];
    box.lo[q] = -M[axis + 1];
    // sum(z) <= M_0 with every other z_i >= -M_i.
    box.hi[q] = total - M[axis + 1];
  }
  return box;
}

}  // namespace fewnomial
