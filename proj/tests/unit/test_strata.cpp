#include "fewnomial/normalize.hpp"
#include "fewnomial/strata.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace fewnomial;

namespace {

NormalizedSum random_normalized(Rng& rng, int n, int l) {
  std::vector<Term> t;
  t.push_back({rng.uniform(0.5, 2), Vector::Zero(n)});
  for (int j = 0; j < n; ++j) t.push_back({rng.uniform(-2, -0.5), Vector::Unit(n, j)});
  for (int k = 0; k < l; ++k) t.push_back({rng.uniform(-2, 2), oracle::random_vector(rng, n, -2, 2)});
  return normalize(ExponentialSum(n, std::move(t)));
}

}  // namespace

TEST_CASE("stratum enumeration") {
  for (int n = 1; n <= 6; ++n) {
    const auto strata = enumerate_strata(n);
    CHECK(strata.size() == static_cast<std::size_t>((1 << (n + 1)) - n - 2));
    std::set<Subset> distinct(strata.begin(), strata.end());
    CHECK(distinct.size() == strata.size());
    for (std::size_t i = 1; i < strata.size(); ++i) {
      const auto& a = strata[i - 1];
      const auto& b = strata[i];
      CHECK((a.size() < b.size() || (a.size() == b.size() && a < b)));
    }
  }
  const auto s2 = enumerate_strata(2);
  CHECK(s2 == std::vector<Subset>{{}, {0}, {1}, {2}});
}

TEST_CASE("charts land on the face and restrict phi exactly") {
  Rng rng(31);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 2 + trial % 2;
    const int l = trial % 3;
    const auto ns = random_normalized(rng, n, l);
    const SimplexSpec M(oracle::random_vector(rng, n + 1, 0.5, 2.0));
    for (const auto& S : enumerate_strata(n)) {
      const auto st = restrict(ns, M, S);
      CHECK(st.face_dim() == n - static_cast<int>(S.size()));
      CHECK(st.restricted.size() <= static_cast<std::size_t>(st.face_dim() + l + 1 + (st.contains_zero() ? 1 : 0)));
      for (int p = 0; p < 100; ++p) {
        const Vector w = oracle::random_vector(rng, st.face_dim(), -1, 1);
        const Vector z = st.chart.apply(w);
        for (int i : S) {
          if (i == 0) {
            CHECK(std::abs(z.sum() - M[0]) <= 1e-10);
          } else {
            CHECK(std::abs(z[i - 1] + M[i]) <= 1e-10);
          }
        }
        const double a = evaluate(st.restricted, w);
        const double b = evaluate(ns.sum, z);
        CHECK(std::abs(a - b) <= 1e-9 * magnitude(ns.sum, z));
      }
    }
  }
}

TEST_CASE("eliminated coordinate is the smallest index outside S") {
  Rng rng(32);
  const auto ns = random_normalized(rng, 3, 1);
  const SimplexSpec M(Vector::Constant(4, 1.0));
  CHECK(restrict(ns, M, {0}).eliminated_index == 1);
  CHECK(restrict(ns, M, {0, 1}).eliminated_index == 2);
  CHECK(restrict(ns, M, {0, 2}).eliminated_index == 1);
  CHECK(restrict(ns, M, {1, 2}).eliminated_index == -1);
  CHECK_THROWS_AS(restrict(ns, M, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(restrict(ns, M, {2, 1}), std::invalid_argument);
}

TEST_CASE("face classification") {
  const SimplexSpec M(Vector::Constant(3, 1.0));
  Vector z(2);
  z << 0.1, 0.2;
  CHECK(face_classify(M, z, 1e-9).status == FaceStatus::interior);
  z << -1.0, 0.2;
  auto fc = face_classify(M, z, 1e-9);
  CHECK(fc.status == FaceStatus::boundary);
  CHECK(fc.active == Subset{1});
  z << -1.0, 2.0;
  fc = face_classify(M, z, 1e-9);
  CHECK(fc.active == Subset{0, 1});
  z << 0.9, 0.9;
  CHECK(face_classify(M, z, 1e-9).status == FaceStatus::exterior);
  CHECK(M.contains(Vector::Zero(2)));
  CHECK_FALSE(M.contains(z));
}

TEST_CASE("simplex helpers") {
  CHECK_THROWS_AS(SimplexSpec(Vector::Constant(1, 1.0)), std::invalid_argument);
  CHECK_THROWS_AS(SimplexSpec(Vector::Constant(3, -1.0)), std::invalid_argument);
  const SimplexSpec M(Vector::Constant(3, 2.0));
  CHECK(inflate(M, 2.0).M() == Vector::Constant(3, 4.0));
  CHECK_THROWS_AS(inflate(M, 0.5), std::invalid_argument);
  const auto a = generic_simplex(M.M(), 5, 0);
  const auto b = generic_simplex(M.M(), 5, 0);
  const auto c = generic_simplex(M.M(), 5, 1);
  CHECK(a.M() == b.M());
  CHECK(a.M() != c.M());
  for (int i = 0; i < 3; ++i) CHECK((a[i] >= 2.0 && a[i] < 2.0 * (1 + 1e-3)));
}
