#include "fewnomial/homology.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace fewnomial {

namespace {

// Delta_M in t = z + M coordinates is { t >= 0, sum t <= T }. With partial sums
// s_i = t_1 + ... + t_i it becomes { 0 <= s_1 <= ... <= s_n <= T }, a union of
// Freudenthal simplices of the cube grid, so the grid triangulation of s-space
// pulls back to a triangulation of Delta_M whose facets lie in the faces H_i.

struct Key {
  std::array<std::uint32_t, 4> v{};
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto x : k.v) h = (h ^ x) * 0x100000001b3ULL;
    return static_cast<std::size_t>(h);
  }
};

struct Grid {
  int n = 0;
  int r = 0;
  std::vector<int> vertex_of_k;   // dense over k in [0, r]^n, -1 outside the simplex
  std::vector<double> value;      // phi at each vertex
  std::vector<std::int8_t> sign;  // +1 / -1
  std::vector<Vector> point;
};

int dense_index(const std::array<int, 3>& k, int n, int r) {
  int idx = 0;
  for (int i = n - 1; i >= 0; --i) idx = idx * (r + 1) + k[static_cast<std::size_t>(i)];
  return idx;
}

// Returns false when some vertex value is numerically zero and zeros are not tolerated.
bool build_grid(const NormalizedSum& ns, const SimplexSpec& M, int r, bool tolerate_zero, Grid& g) {
  const int n = ns.dim();
  g.n = n;
  g.r = r;
  const double h = M.extent() / r;
  std::size_t dense = 1;
  for (int i = 0; i < n; ++i) dense *= static_cast<std::size_t>(r + 1);
  g.vertex_of_k.assign(dense, -1);
  g.value.clear();
  g.sign.clear();
  g.point.clear();

  std::array<int, 3> k{0, 0, 0};
  const auto visit = [&](const std::array<int, 3>& kk) {
    Vector z(n);
    for (int i = 0; i < n; ++i) z[i] = -M[i + 1] + h * kk[static_cast<std::size_t>(i)];
    const double v = evaluate(ns.sum, z);
    if (std::abs(v) < 1e-12 * magnitude(ns.sum, z) && !tolerate_zero) return false;
    g.vertex_of_k[static_cast<std::size_t>(dense_index(kk, n, r))] = static_cast<int>(g.value.size());
    g.value.push_back(v);
    g.sign.push_back(v < 0 ? -1 : 1);
    g.point.push_back(std::move(z));
    return true;
  };
  if (n == 2) {
    for (k[0] = 0; k[0] <= r; ++k[0]) {
      for (k[1] = 0; k[0] + k[1] <= r; ++k[1]) {
        if (!visit(k)) return false;
      }
    }
  } else {
    for (k[0] = 0; k[0] <= r; ++k[0]) {
      for (k[1] = 0; k[0] + k[1] <= r; ++k[1]) {
        for (k[2] = 0; k[0] + k[1] + k[2] <= r; ++k[2]) {
          if (!visit(k)) return false;
        }
      }
    }
  }
  return true;
}

// Vertex id of the lattice point with partial sums s, or -1 outside.
int vertex_at(const Grid& g, const std::array<int, 3>& s) {
  std::array<int, 3> k{0, 0, 0};
  int prev = 0;
  for (int i = 0; i < g.n; ++i) {
    const int ki = s[static_cast<std::size_t>(i)] - prev;
    if (ki < 0) return -1;
    k[static_cast<std::size_t>(i)] = ki;
    prev = s[static_cast<std::size_t>(i)];
  }
  if (prev > g.r) return -1;
  return g.vertex_of_k[static_cast<std::size_t>(dense_index(k, g.n, g.r))];
}

class ComplexBuilder {
 public:
  ComplexBuilder(const Grid& g) : g_(g), maps_(static_cast<std::size_t>(g.n)) {}

  void add_simplex(const std::array<int, 4>& verts, int count) {
    int pos = 0;
    int neg = 0;
    for (int i = 0; i < count; ++i) (g_.sign[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] > 0 ? pos : neg)++;
    if (pos == 0 || neg == 0) return;
    const unsigned full = (1u << count) - 1;
    std::array<int, 16> cell_of_mask;
    cell_of_mask.fill(-1);
    // Increasing popcount, so every facet is registered before its cofaces.
    for (int size = 2; size <= count; ++size) {
      for (unsigned mask = 1; mask <= full; ++mask) {
        if (std::popcount(mask) != size || !bichromatic(verts, mask)) continue;
        cell_of_mask[mask] = cell_for(verts, mask, cell_of_mask);
      }
    }
  }

  CellComplex take() { return std::move(complex_); }

 private:
  bool bichromatic(const std::array<int, 4>& verts, unsigned mask) const {
    bool p = false;
    bool q = false;
    for (int i = 0; i < 4; ++i) {
      if (!(mask & (1u << i))) continue;
      (g_.sign[static_cast<std::size_t>(verts[static_cast<std::size_t>(i)])] > 0 ? p : q) = true;
    }
    return p && q;
  }

  Key key_of(const std::array<int, 4>& verts, unsigned mask, int& size) const {
    Key key;
    key.v.fill(0xFFFFFFFFu);
    size = 0;
    for (int i = 0; i < 4; ++i) {
      if (mask & (1u << i)) key.v[static_cast<std::size_t>(size++)] = static_cast<std::uint32_t>(verts[static_cast<std::size_t>(i)]);
    }
    std::sort(key.v.begin(), key.v.begin() + size);
    return key;
  }

  int cell_for(const std::array<int, 4>& verts, unsigned mask, const std::array<int, 16>& cell_of_mask) {
    int size = 0;
    const Key key = key_of(verts, mask, size);
    const int dim = size - 2;
    auto& map = maps_[static_cast<std::size_t>(dim)];
    if (const auto it = map.find(key); it != map.end()) return it->second;

    std::vector<int> boundary;
    if (dim > 0) {
      for (int i = 0; i < 4; ++i) {
        if (!(mask & (1u << i))) continue;
        const unsigned sub = mask & ~(1u << i);
        if (cell_of_mask[sub] >= 0) boundary.push_back(cell_of_mask[sub]);
      }
    }
    const int id = complex_.add_cell(dim, std::move(boundary));
    map.emplace(key, id);
    if (dim == 0) {
      const auto a = key.v[0];
      const auto b = key.v[1];
      const double fa = g_.value[a];
      const double fb = g_.value[b];
      const double t = (fa - fb) != 0.0 ? fa / (fa - fb) : 0.5;
      complex_.positions.push_back(g_.point[a] + std::clamp(t, 0.0, 1.0) * (g_.point[b] - g_.point[a]));
    }
    if (dim == g_.n - 1) complex_.polygons.push_back(polygon(key, size));
    return id;
  }

  // 0-cells on the boundary of a top cell in cyclic order.
  std::vector<int> polygon(const Key& key, int size) {
    std::vector<std::uint32_t> pos;
    std::vector<std::uint32_t> neg;
    for (int i = 0; i < size; ++i) (g_.sign[key.v[static_cast<std::size_t>(i)]] > 0 ? pos : neg).push_back(key.v[static_cast<std::size_t>(i)]);
    const auto vertex = [&](std::uint32_t a, std::uint32_t b) {
      Key k;
      k.v.fill(0xFFFFFFFFu);
      k.v[0] = std::min(a, b);
      k.v[1] = std::max(a, b);
      return maps_[0].at(k);
    };
    std::vector<int> out;
    if (pos.size() == 1 || neg.size() == 1) {
      const auto& lone = pos.size() == 1 ? pos : neg;
      const auto& rest = pos.size() == 1 ? neg : pos;
      for (auto v : rest) out.push_back(vertex(lone[0], v));
    } else {
      out = {vertex(pos[0], neg[0]), vertex(pos[0], neg[1]), vertex(pos[1], neg[1]), vertex(pos[1], neg[0])};
    }
    return out;
  }

  const Grid& g_;
  std::vector<std::unordered_map<Key, int, KeyHash>> maps_;
  CellComplex complex_;
};

CellComplex triangulate(const Grid& g) {
  ComplexBuilder builder(g);
  const int n = g.n;
  std::array<int, 3> base{0, 0, 0};
  std::array<int, 4> verts{};
  const auto emit = [&] {
    std::array<int, 3> p{0, 1, 2};
    do {
      std::array<int, 3> s = base;
      bool inside = true;
      verts[0] = vertex_at(g, s);
      if (verts[0] < 0) return;
      for (int j = 0; j < n && inside; ++j) {
        ++s[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])];
        verts[static_cast<std::size_t>(j + 1)] = vertex_at(g, s);
        inside = verts[static_cast<std::size_t>(j + 1)] >= 0;
      }
      if (inside) builder.add_simplex(verts, n + 1);
    } while (std::next_permutation(p.begin(), p.begin() + n));
  };
  if (n == 2) {
    for (base[0] = 0; base[0] < g.r; ++base[0]) {
      for (base[1] = base[0]; base[1] < g.r; ++base[1]) emit();
    }
  } else {
    for (base[0] = 0; base[0] < g.r; ++base[0]) {
      for (base[1] = base[0]; base[1] < g.r; ++base[1]) {
        for (base[2] = base[1]; base[2] < g.r; ++base[2]) emit();
      }
    }
  }
  return builder.take();
}

}  // namespace

CellComplex marching_complex(const NormalizedSum& ns, const SimplexSpec& M, int resolution) {
  const int n = ns.dim();
  if (n != 2 && n != 3) throw std::invalid_argument("marching_complex: dimension must be 2 or 3");
  if (M.dim() != n) throw std::invalid_argument("marching_complex: simplex dimension differs from the sum");
  if (resolution < 16) throw std::invalid_argument("marching_complex: resolution must be >= 16");
  Grid g;
  // A vertex on Z shifts every interior node when the resolution changes by one.
  for (int attempt = 0; attempt < 5; ++attempt) {
    if (build_grid(ns, M, resolution + attempt, false, g)) return triangulate(g);
  }
  build_grid(ns, M, resolution, true, g);
  return triangulate(g);
}

}  // namespace fewnomial
