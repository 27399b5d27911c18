#include "fewnomial/bounds.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace fewnomial;

TEST_CASE("closed forms against the independent reference") {
  CHECK(oracle::rel(theorem1_bound(1, 1).value, oracle::constant()) <= 1e-12);
  CHECK(oracle::rel(theorem1_bound(2, 2).value, 3 * (std::exp(2.0L) + 3)) <= 1e-12);
  CHECK(khovanskii_bound(2, 1).value == 10976.0);
  CHECK(milnor_bound(2, 2).value == 18.0);
  CHECK(khovanskii_bound(1, 0).value == 2.0);
  CHECK(theorem1_bound(1, 0).value == doctest::Approx(5.1945280494653).epsilon(1e-12));
  CHECK(theorem1_bound(2, 1).value == doctest::Approx(10.389056098930).epsilon(1e-12));
  for (int n = 1; n <= 8; ++n) {
    for (int l = 0; l <= 6; ++l) {
      CHECK(oracle::rel(theorem1_bound(n, l).value, oracle::theorem1(n, l)) <= 1e-12);
      CHECK(oracle::rel(khovanskii_bound(n, l).value, oracle::khovanskii_approx(n, l)) <= 1e-12);
      if (n + l <= 9) CHECK(khovanskii_bound(n, l).value == static_cast<double>(oracle::khovanskii(n, l)));
      if (l >= 1) CHECK(oracle::rel(simple_bound(n, l).value, oracle::simple(n, l)) <= 1e-12);
    }
    for (int d = 1; d <= 5; ++d) CHECK(milnor_bound(n, d).value == static_cast<double>(oracle::milnor(n, d)));
  }
}

TEST_CASE("theorem bound equals the simple bound for l = 1") {
  for (int n = 1; n <= 16; ++n) CHECK(oracle::rel(theorem1_bound(n, 1).value, simple_bound(n, 1).value) <= 1e-12);
}

TEST_CASE("simple bound is an upper bound for l >= 1 and undefined for l = 0") {
  CHECK_THROWS_AS(simple_bound(3, 0), std::invalid_argument);
  for (int n = 1; n <= 12; ++n) {
    for (int l = 1; l <= 8; ++l) CHECK(theorem1_bound(n, l).value <= simple_bound(n, l).value * (1 + 1e-12));
  }
}

TEST_CASE("log values agree with values and stay finite past overflow") {
  for (int n = 1; n <= 20; ++n) {
    for (int l = 0; l <= 12; ++l) {
      for (const auto& b : {khovanskii_bound(n, l), theorem1_bound(n, l), bs_system_bound(n, l)}) {
        CHECK(std::isfinite(b.value));
        CHECK(b.value > 0);
        CHECK(std::abs(std::log(b.value) - b.log_value) <= 1e-10 * std::max(1.0, b.log_value));
      }
    }
  }
  const auto huge = khovanskii_bound(40, 30);
  CHECK(std::isinf(huge.value));
  CHECK(std::isfinite(huge.log_value));
  CHECK(huge.log_value > 700);
}

TEST_CASE("per-stratum bound uses l + 1 extra terms when 0 is in S") {
  CHECK(per_stratum_bound(3, 1, false, 2).value == bs_system_bound(2, 2).value);
  CHECK(per_stratum_bound(3, 1, true, 2).value == bs_system_bound(2, 3).value);
  CHECK_THROWS_AS(per_stratum_bound(3, 3, false, 1), std::invalid_argument);
  CHECK_THROWS_AS(per_stratum_bound(3, -1, false, 1), std::invalid_argument);
  // Summing the strata that avoid 0 reproduces the theorem bound.
  for (int n = 1; n <= 8; ++n) {
    for (int l = 1; l <= 5; ++l) {
      long double sum = 0;
      for (int s = 0; s < n; ++s) sum += static_cast<long double>(oracle::binom(n, s)) * per_stratum_bound(n, s, false, l).value;
      CHECK(oracle::rel(sum, theorem1_bound(n, l).value) <= 1e-12);
    }
  }
}

TEST_CASE("strict integer cap") {
  CHECK(strict_integer_cap(2.0) == 1);
  CHECK(strict_integer_cap(2.5972) == 2);
  CHECK(strict_integer_cap(oracle::constant()) == 2);
}

TEST_CASE("binomial power sum identities") {
  for (int n = 1; n <= 30; ++n) {
    CHECK(oracle::binomial_power_sum(n, 1) == static_cast<oracle::i128>(n) * oracle::ipow(2, n - 1));
    for (int l = 0; l <= 6; ++l) {
      oracle::i128 reflected = 0;
      for (int i = 0; i < n; ++i) reflected += oracle::binom(n, i) * oracle::ipow(n - i, l);
      const oracle::i128 extra = (l == 0 ? 1 : 0);  // the i = n term of the reflected sum is 0^l
      CHECK(reflected + extra == oracle::binomial_power_sum(n, l));
    }
  }
  for (int n = 1; n <= 20; ++n) {
    for (int l = 0; l <= 8; ++l) {
      CHECK(std::abs(log_binomial_power_sum(n, l) -
                     std::log(static_cast<long double>(oracle::binomial_power_sum(n, l)))) <= 1e-12 * (1 + l * n));
    }
  }
}

TEST_CASE("normalized power sum is non-increasing in l") {
  for (int n = 1; n <= 12; ++n) {
    long double prev = INFINITY;
    for (int l = 0; l <= 8; ++l) {
      const long double v = static_cast<long double>(oracle::binomial_power_sum(n, l)) / std::pow(static_cast<long double>(n), l);
      CHECK(v <= prev * (1 + 1e-15L));
      prev = v;
    }
  }
}

TEST_CASE("bound report contents") {
  const auto r = compare_bounds(2, 1, 3);
  CHECK(r.khovanskii.value == 10976.0);
  REQUIRE(r.simple.has_value());
  REQUIRE(r.milnor.has_value());
  CHECK(r.milnor->value == 75.0);
  CHECK(r.per_stratum.size() == 4);
  CHECK(r.theorem1_cap == 10);
  CHECK_FALSE(compare_bounds(1, 0).simple.has_value());
}
