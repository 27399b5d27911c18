#include "fewnomial/bounds.hpp"
#include "fewnomial/critical.hpp"
#include "fewnomial/error.hpp"
#include "fewnomial/solver.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace fewnomial;

namespace {

NormalizedSum ambient(const ExponentialSum& raw) {
  NormalizeOptions opt;
  opt.reduction = Reduction::ambient;
  return normalize(raw, opt);
}

Direction dir(std::initializer_list<double> v) {
  Vector u(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) u[i++] = x;
  return Direction::from_vector(u, 7);
}

// Same stratum, but solving the H_0 equation for the largest free coordinate.
StratumSpec restrict_largest(const NormalizedSum& ns, const SimplexSpec& M, const Subset& S) {
  const int n = ns.dim();
  StratumSpec st;
  st.S = S;
  for (int k = 1; k <= n; ++k) {
    if (!std::binary_search(S.begin(), S.end(), k)) st.chart.free_axes.push_back(k - 1);
  }
  const int j = st.chart.free_axes.back();
  st.chart.free_axes.pop_back();
  st.eliminated_index = j + 1;
  const int m = st.face_dim();
  st.chart.linear = Matrix::Zero(n, m);
  st.chart.offset = Vector::Zero(n);
  double pinned = 0;
  for (int q = 0; q < m; ++q) st.chart.linear(st.chart.free_axes[static_cast<std::size_t>(q)], q) = 1.0;
  for (int i : S) {
    if (i > 0) {
      st.chart.offset[i - 1] = -M[i];
      pinned += M[i];
    }
  }
  st.chart.linear.row(j).setConstant(-1.0);
  st.chart.offset[j] = M[0] + pinned;
  std::vector<Term> terms;
  for (const auto& t : ns.sum.terms()) {
    terms.push_back({t.coefficient * std::exp(t.exponent.dot(st.chart.offset)), st.chart.linear.transpose() * t.exponent});
  }
  st.restricted = merge_terms(ExponentialSum(m, std::move(terms)));
  return st;
}

int face_roots(const StratumSpec& st, const SimplexSpec& M, const Direction& u) {
  SolveConfig cfg;
  cfg.starts = 800;
  const auto sys = critical_system(st, restrict_direction(u.u, st));
  const auto res = solve_multistart(sys, face_box(st, M), cfg);
  int c = 0;
  for (const auto& r : res.roots) {
    const auto fc = face_classify(M, st.chart.apply(r.w), 1e-8);
    c += (fc.status != FaceStatus::exterior && fc.active == st.S) ? 1 : 0;
  }
  return c;
}

}  // namespace

TEST_CASE("householder complement is an orthonormal basis of u-perp") {
  Rng rng(41);
  for (int m = 1; m <= 5; ++m) {
    const Vector u = oracle::random_vector(rng, m, -1, 1);
    const Matrix P = householder_complement(u);
    CHECK(P.rows() == m);
    CHECK(P.cols() == m - 1);
    if (m > 1) {
      CHECK((P.transpose() * P - Matrix::Identity(m - 1, m - 1)).norm() < 1e-12);
      CHECK((P.transpose() * u).norm() < 1e-12 * u.norm());
    }
  }
}

TEST_CASE("critical point of (1,1) on e^w1 + e^w2 = 1 is (-log 2, -log 2)") {
  const auto ns = normalize(oracle::make(2, {{0, 0}, {1, 0}, {0, 1}}, {-1, 1, 1}));
  const SimplexSpec M(Vector::Constant(3, 3.0));
  const auto st = restrict(ns, M, {});
  SolveConfig cfg;
  const auto res = solve_multistart(critical_system(st, Vector::Constant(2, 1.0)), face_box(st, M), cfg);
  REQUIRE(res.roots.size() == 1);
  CHECK(res.roots[0].w[0] == doctest::Approx(-std::log(2.0)).epsilon(1e-10));
  CHECK(res.roots[0].w[1] == doctest::Approx(-std::log(2.0)).epsilon(1e-10));
  CHECK(res.roots[0].residual <= 1e-11);
  CHECK(res.roots[0].jacobian_min_sv > 0);
}

TEST_CASE("no real zeros: e^w + 1 yields no critical points") {
  const auto ns = normalize(oracle::make(1, {{0}, {1}}, {1, 1}));
  const SimplexSpec M(Vector::Constant(2, 2.0));
  const auto st = restrict(ns, M, {});
  const auto res = solve_multistart(critical_system(st, Vector::Constant(1, 1.0)), face_box(st, M), SolveConfig{});
  CHECK(res.roots.empty());
}

TEST_CASE("restricted direction composes with the chart") {
  Rng rng(42);
  const auto ns = normalize(oracle::sphere());
  const SimplexSpec M(Vector::Constant(4, 1.5));
  const Vector u = oracle::random_vector(rng, 3, -1, 1);
  for (const auto& S : enumerate_strata(3)) {
    const auto st = restrict(ns, M, S);
    const Vector uf = restrict_direction(u, st);
    for (int p = 0; p < 20; ++p) {
      const Vector w = oracle::random_vector(rng, st.face_dim(), -1, 1);
      CHECK(std::abs(uf.dot(w) + u.dot(st.chart.offset) - u.dot(st.chart.apply(w))) < 1e-10);
    }
  }
  const auto st1 = restrict(ns, M, {1});
  Vector e(3);
  e << 0.1, 0.2, 0.3;
  CHECK(restrict_direction(e, st1) == Vector(Eigen::Vector2d(0.2, 0.3)));
  CHECK(restrict_direction(e, restrict(ns, M, {})) == e);
}

TEST_CASE("cone generators satisfy their defining equations") {
  Rng rng(43);
  for (int k = 0; k < 20; ++k) {
    const int n = 3;
    const Vector g = oracle::random_vector(rng, n, -1, 1);
    const std::vector<Vector> normals{inward_normal(0, n), inward_normal(2, n)};
    const auto w = cone_generators(g, normals);
    REQUIRE(w.size() == 2);
    for (std::size_t a = 0; a < 2; ++a) {
      CHECK(std::abs(g.dot(w[a])) < 1e-10 * g.norm());
      for (std::size_t b = 0; b < 2; ++b) CHECK(std::abs(normals[b].dot(w[a]) - (a == b ? 1.0 : 0.0)) < 1e-10);
    }
  }
  CHECK(inward_normal(0, 4).norm() == doctest::Approx(1.0));
  CHECK_THROWS_AS(cone_generators(Vector::Unit(2, 0), {inward_normal(1, 2)}), GenericityError);
}

TEST_CASE("cannoli shell: four critical points, the two on the lower rim contribute") {
  // Cylinder y^2 + z^2 = 1, 0 <= x <= 1, tilted height f = z + eps x. The rims
  // x = 0 (inward normal +e_x) and x = 1 (inward normal -e_x) each carry the
  // top and bottom of their circle as critical points.
  const double eps = 0.1;
  Vector u(3);
  u << eps, 0.0, 1.0;
  int contributing = 0;
  int critical = 0;
  for (double x : {0.0, 1.0}) {
    for (double z : {-1.0, 1.0}) {
      Vector grad(3);
      grad << 0.0, 0.0, 2.0 * z;
      const Vector normal = x == 0.0 ? Vector(Vector::Unit(3, 0)) : Vector(-Vector::Unit(3, 0));
      // Tangent of the rim circle at (x, 0, z) is e_y; u is orthogonal to it.
      CHECK(u.dot(Vector::Unit(3, 1)) == 0.0);
      ++critical;
      const auto w = cone_generators(grad, {normal});
      const bool c = is_contributing(u, {1}, w);
      contributing += c ? 1 : 0;
      CHECK(c == (x == 0.0));
    }
  }
  CHECK(critical == 4);
  CHECK(contributing == 2);
}

TEST_CASE("is_contributing flags flat cone derivatives") {
  CHECK(is_contributing(Vector::Unit(2, 0), {}, {}));
  CHECK_THROWS_AS(is_contributing(Vector::Unit(2, 0), {1}, {Vector::Unit(2, 1)}), GenericityError);
}

TEST_CASE("oval: a generic linear function has indices 0 and 1") {
  const auto ns = normalize(oracle::ellipse());
  const SimplexSpec M = generic_simplex(Vector::Constant(3, 3.0), 1, 0);
  const auto rep = morse_census(ns, M, Direction::random(2, 5), CensusConfig{});
  std::vector<int> idx;
  for (const auto& st : rep.strata) {
    for (const auto& r : st.records) {
      CHECK(r.S.empty());
      CHECK(r.morse_index <= static_cast<int>(st.face_dim));
      idx.push_back(r.morse_index);
    }
  }
  std::sort(idx.begin(), idx.end());
  CHECK(idx == std::vector<int>{0, 1});
  CHECK(rep.contributing_count == 2);
  CHECK(rep.contributing_count <= theorem1_bound(2, 2).value);
}

TEST_CASE("segment: one contributing endpoint, none inside") {
  const auto ns = ambient(oracle::segment());
  const SimplexSpec M = generic_simplex(Vector::Constant(3, 2.0), 1, 0);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto rep = morse_census(ns, M, Direction::random(2, seed), CensusConfig{});
    CHECK(rep.contributing_count == 1);
    int boundary = 0;
    for (const auto& st : rep.strata) {
      if (st.S.empty()) CHECK(st.records.empty());
      boundary += static_cast<int>(st.records.size());
    }
    CHECK(boundary == 2);
  }
}

TEST_CASE("shift moves the segment's contribution off H_0") {
  const auto ns = ambient(oracle::segment());
  const SimplexSpec M = generic_simplex(Vector::Constant(3, 2.0), 1, 0);
  const Direction u = dir({0.3, -1.0});
  const auto before = census_once(ns, M, u, CensusConfig{});
  CHECK(before.contributing_on_zero_strata() == 1);
  const auto shifted = choose_shift(ns, M, u, CensusConfig{});
  CHECK(shifted.lambda == 1.0);
  CHECK(shifted.census.contributing_on_zero_strata() == 0);
  CHECK(shifted.census.contributing_count >= 1);
  for (const auto& st : shifted.census.strata) {
    for (const auto& r : st.records) {
      if (r.contributing) CHECK_FALSE(st.S.front() == 0);
    }
  }
  // No contribution on H_0 to begin with: lambda = 1 is accepted at once.
  const auto easy = choose_shift(ns, M, dir({0.3, 1.0}), CensusConfig{});
  CHECK(easy.doublings == 0);
}

TEST_CASE("counts do not depend on the eliminated coordinate") {
  for (const auto& raw : {oracle::ellipse(), oracle::sphere()}) {
    const auto ns = normalize(raw);
    const int n = ns.dim();
    const SimplexSpec M = generic_simplex(Vector::Constant(n + 1, 0.6), 3, 0);
    const Direction u = Direction::random(n, 9);
    for (const auto& S : enumerate_strata(n)) {
      if (S.empty() || S.front() != 0) continue;
      const auto a = restrict(ns, M, S);
      const auto b = restrict_largest(ns, M, S);
      CHECK(face_roots(a, M, u) == face_roots(b, M, u));
    }
  }
}

TEST_CASE("census is invariant to the pivot choice and to scaling u") {
  NormalizeOptions pivoted;
  pivoted.prefer_standard_basis = false;
  const auto a = normalize(oracle::ellipse());
  const auto b = normalize(oracle::ellipse(), pivoted);
  const SimplexSpec M = generic_simplex(Vector::Constant(3, 4.0), 2, 0);
  const auto ra = morse_census(a, M, Direction::random(2, 3), CensusConfig{});
  const auto rb = morse_census(b, M, Direction::random(2, 3), CensusConfig{});
  CHECK(ra.contributing_count == rb.contributing_count);
  const Direction u = Direction::random(2, 3);
  const auto r1 = census_once(a, M, u, CensusConfig{});
  const auto r2 = census_once(a, M, Direction{2.0 * u.u, u.seed}, CensusConfig{});
  CHECK(r1.contributing_count == r2.contributing_count);
  CHECK(r1.record_count == r2.record_count);
}

TEST_CASE("random instances respect the per-stratum bound") {
  Rng rng(44);
  for (int k = 0; k < 10; ++k) {
    const int n = 2 + k % 2;
    const int l = k % 3;
    std::vector<Term> t;
    t.push_back({rng.uniform(0.2, 1), Vector::Zero(n)});
    for (int j = 0; j < n; ++j) t.push_back({rng.uniform(-1, 1), Vector::Unit(n, j)});
    for (int q = 0; q < l; ++q) t.push_back({rng.uniform(-1, 1), oracle::random_vector(rng, n, -2, 2)});
    const auto ns = normalize(ExponentialSum(n, std::move(t)));
    const auto rep = census_generic(ns, Vector::Constant(n + 1, 2.0), static_cast<std::uint64_t>(k + 1), CensusConfig{});
    for (const auto& st : rep.strata) {
      CHECK(st.root_count <= st.bound);
      CHECK(st.within_bound);
    }
  }
}
