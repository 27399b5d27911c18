#include "fewnomial/homology.hpp"

#include "fewnomial/error.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace fewnomial {

int CellComplex::add_cell(int dim, std::vector<int> boundary) {
  if (dim < 0) throw std::invalid_argument("add_cell: negative dimension");
  if (dim == 0 && !boundary.empty()) throw std::invalid_argument("add_cell: a vertex has no boundary");
  for (int b : boundary) {
    if (b < 0 || static_cast<std::size_t>(b) >= count(dim - 1)) {
      throw std::invalid_argument("add_cell: boundary cell does not exist");
    }
  }
  std::sort(boundary.begin(), boundary.end());
  if (cells_.size() <= static_cast<std::size_t>(dim)) cells_.resize(static_cast<std::size_t>(dim) + 1);
  auto& level = cells_[static_cast<std::size_t>(dim)];
  level.push_back(std::move(boundary));
  return static_cast<int>(level.size()) - 1;
}

int CellComplex::top_dim() const {
  for (int d = static_cast<int>(cells_.size()) - 1; d >= 0; --d) {
    if (!cells_[static_cast<std::size_t>(d)].empty()) return d;
  }
  return -1;
}

std::size_t CellComplex::count(int dim) const {
  if (dim < 0 || static_cast<std::size_t>(dim) >= cells_.size()) return 0;
  return cells_[static_cast<std::size_t>(dim)].size();
}

const std::vector<int>& CellComplex::boundary(int dim, int cell) const {
  return cells_.at(static_cast<std::size_t>(dim)).at(static_cast<std::size_t>(cell));
}

bool CellComplex::boundary_squared_zero() const {
  for (int d = 2; d <= top_dim(); ++d) {
    for (std::size_t c = 0; c < count(d); ++c) {
      std::unordered_map<int, int> parity;
      for (int f : boundary(d, static_cast<int>(c))) {
        for (int g : boundary(d - 1, f)) parity[g] ^= 1;
      }
      for (const auto& [cell, p] : parity) {
        if (p != 0) return false;
      }
    }
  }
  return true;
}

long long CellComplex::euler_characteristic() const {
  long long chi = 0;
  for (int d = 0; d <= top_dim(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(count(d));
  return chi;
}

int BettiVector::sum() const {
  int s = 0;
  for (int v : b) s += v;
  return s;
}

int gf2_rank(std::vector<std::vector<int>> columns) {
  // Column reduction keyed by the lowest (largest-index) nonzero row.
  std::unordered_map<int, std::size_t> pivot_owner;
  int rank = 0;
  std::vector<int> scratch;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    auto& col = columns[c];
    std::sort(col.begin(), col.end());
    while (!col.empty()) {
      const auto it = pivot_owner.find(col.back());
      if (it == pivot_owner.end()) break;
      const auto& other = columns[it->second];
      scratch.clear();
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(), std::back_inserter(scratch));
      col.swap(scratch);
    }
    if (!col.empty()) {
      pivot_owner.emplace(col.back(), c);
      ++rank;
    }
  }
  return rank;
}

BettiVector betti(const CellComplex& complex, int min_length) {
  if (!complex.boundary_squared_zero()) throw std::logic_error("betti: boundary of boundary is not zero");
  const int top = complex.top_dim();
  std::vector<int> ranks(static_cast<std::size_t>(top + 2), 0);  // ranks[k] = rank d_k
  for (int k = 1; k <= top; ++k) {
    std::vector<std::vector<int>> cols;
    cols.reserve(complex.count(k));
    for (std::size_t c = 0; c < complex.count(k); ++c) cols.push_back(complex.boundary(k, static_cast<int>(c)));
    ranks[static_cast<std::size_t>(k)] = gf2_rank(std::move(cols));
  }
  BettiVector out;
  for (int k = 0; k <= top; ++k) {
    const int kernel = static_cast<int>(complex.count(k)) - ranks[static_cast<std::size_t>(k)];
    out.b.push_back(kernel - ranks[static_cast<std::size_t>(k + 1)]);
  }
  if (static_cast<int>(out.b.size()) < min_length) out.b.resize(static_cast<std::size_t>(min_length), 0);
  return out;
}

std::vector<double> isolate_roots_1d(const ExponentialSum& sum, double lo, double hi, double tol) {
  if (sum.ambient_dim() != 1) throw std::invalid_argument("isolate_roots_1d: need a one-variable sum");
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) throw std::invalid_argument("isolate_roots_1d: bad interval");
  if (!(tol > 0)) throw std::invalid_argument("isolate_roots_1d: tol must be positive");
  const auto f = [&](double x) { return evaluate(sum, Vector::Constant(1, x)); };
  const auto sign = [](double v) { return v < 0 ? -1 : 1; };

  std::vector<double> grid;
  std::vector<int> signs;
  const auto sample = [&](int cells, double offset) {
    grid.assign(static_cast<std::size_t>(cells) + 1, 0.0);
    signs.assign(grid.size(), 0);
    const double h = (hi - lo) / cells;
    for (int k = 0; k <= cells; ++k) {
      const double x = (k == 0) ? lo : (k == cells ? hi : lo + k * h + offset);
      const double v = f(x);
      if (v == 0.0 && k != 0 && k != cells) return false;
      grid[static_cast<std::size_t>(k)] = x;
      signs[static_cast<std::size_t>(k)] = sign(v);
    }
    return true;
  };
  const auto changes = [&] {
    int c = 0;
    for (std::size_t k = 1; k < signs.size(); ++k) c += signs[k] != signs[k - 1] ? 1 : 0;
    return c;
  };

  int cells = 64;
  int previous = -1;
  for (;; cells *= 2) {
    double offset = 0.0;
    int tries = 0;
    while (!sample(cells, offset)) {
      offset += tol / 3.0;
      if (++tries > 5) throw StabilizationError("isolate_roots_1d: grid keeps hitting exact zeros");
    }
    const int count = changes();
    if (count == previous) break;
    previous = count;
    if (cells > (1 << 22)) throw StabilizationError("isolate_roots_1d: root count did not stabilize");
  }

  std::vector<double> roots;
  for (std::size_t k = 1; k < signs.size(); ++k) {
    if (signs[k] == signs[k - 1]) continue;
    double a = grid[k - 1];
    double b = grid[k];
    const int sa = signs[k - 1];
    while (b - a > tol) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      (sign(f(mid)) == sa ? a : b) = mid;
    }
    roots.push_back(0.5 * (a + b));
  }
  return roots;
}

BettiVector betti_at(const NormalizedSum& ns, const SimplexSpec& M, int resolution) {
  const int dim = ns.dim();
  if (M.dim() != dim) throw std::invalid_argument("betti_at: simplex dimension differs from the sum");
  if (dim == 1) {
    const auto roots = isolate_roots_1d(ns.sum, -M[1], M[0]);
    return BettiVector{{static_cast<int>(roots.size())}};
  }
  if (dim > 3) throw std::invalid_argument("betti_at: homology oracle supports dimension <= 3");
  return betti(marching_complex(ns, M, resolution), dim);
}

StableBetti betti_stable(const NormalizedSum& ns, const SimplexSpec& M, int r0, int max_doublings) {
  if (ns.dim() > 3) throw std::invalid_argument("betti_stable: homology oracle supports dimension <= 3");
  if (r0 < 16) throw std::invalid_argument("betti_stable: r0 must be >= 16");
  StableBetti out;
  SimplexSpec current = M;
  std::optional<BettiAttempt> previous_simplex;
  for (int grow = 0; grow <= max_doublings; ++grow) {
    // Resolution loop at this simplex.
    int r = r0;
    BettiVector last = betti_at(ns, current, r);
    out.history.push_back({current.M(), r, last});
    bool settled = false;
    for (int k = 0; k < max_doublings; ++k) {
      r *= 2;
      BettiVector next = betti_at(ns, current, r);
      out.history.push_back({current.M(), r, next});
      if (next == last) {
        settled = true;
        r /= 2;
        break;
      }
      last = next;
    }
    if (!settled) {
      throw StabilizationError("betti_stable: Betti numbers did not stabilize in resolution up to " +
                               std::to_string(r));
    }
    if (previous_simplex && previous_simplex->betti == last) {
      out.betti = previous_simplex->betti;
      out.M = previous_simplex->M;
      out.resolution = previous_simplex->resolution;
      return out;
    }
    previous_simplex = BettiAttempt{current.M(), r, last};
    current = inflate(current, 2.0);
  }
  throw StabilizationError("betti_stable: Betti numbers did not stabilize under simplex inflation");
}

std::string dump_off(const CellComplex& complex) {
  std::ostringstream out;
  out.precision(10);
  const int top = complex.top_dim();
  const std::size_t cells = top >= 1 ? complex.polygons.size() : 0;
  out << "OFF\n" << complex.positions.size() << ' ' << cells << " 0\n";
  for (const auto& p : complex.positions) {
    for (Eigen::Index i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
    for (Eigen::Index i = p.size(); i < 3; ++i) out << " 0";
    out << '\n';
  }
  for (std::size_t c = 0; c < cells; ++c) {
    const auto& poly = complex.polygons[c];
    out << poly.size();
    for (int v : poly) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

}  // namespace fewnomial
