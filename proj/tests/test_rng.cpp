#include <doctest.h>

#include <cmath>
#include <unordered_set>

#include "pufsim/errors.hpp"
#include "pufsim/rng.hpp"

using namespace pufsim::rng;

TEST_CASE("mix64 is deterministic and spreads nearby inputs") {
  CHECK(mix64(1) == mix64(1));
  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 10000; ++i) seen.insert(mix64(i));
  CHECK(seen.size() == 10000);
}

TEST_CASE("derive is injective in the index for a fixed base and label") {
  std::unordered_set<std::uint64_t> seen;
  // Every (row, col, branch) slot of one array.
  for (std::uint64_t idx = 0; idx < 64 * 64 * 2; ++idx) {
    seen.insert(derive(42, label::kDevice, idx));
  }
  CHECK(seen.size() == 64 * 64 * 2);
}

TEST_CASE("normal_quantile matches reference quantiles") {
  struct Point {
    double p, x;
  };
  // Reference: scipy.stats.norm.ppf.
  constexpr Point kTable[] = {
      {1e-12, -7.034483825301131},  {1e-06, -4.753424308822899},
      {0.025, -1.9599639845400545}, {0.3, -0.5244005127080409},
      {0.5, 0.0},                   {0.7, 0.5244005127080407},
      {0.975, 1.959963984540054},   {0.999999, 4.753424308817087},
      {0.999999999999, 7.0344869100478356},
  };
  for (const auto& [p, x] : kTable) {
    CHECK(std::abs(normal_quantile(p) - x) <= 1e-9);
  }
}

TEST_CASE("normal_quantile rejects the closed endpoints") {
  CHECK_THROWS_AS(normal_quantile(0.0), pufsim::InvalidInput);
  CHECK_THROWS_AS(normal_quantile(1.0), pufsim::InvalidInput);
  CHECK_THROWS_AS(normal_quantile(-0.5), pufsim::InvalidInput);
}

TEST_CASE("Prng units stay strictly inside (0, 1)") {
  Prng prng(123);
  for (int i = 0; i < 100000; ++i) {
    const double u = prng.next_unit();
    CHECK(u > 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("Prng gaussian stream has the expected moments") {
  Prng prng(2024);
  const int n = 200000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double g = prng.next_gaussian();
    sum += g;
    sum_sq += g * g;
  }
  const double mean = sum / n;
  const double stddev = std::sqrt(sum_sq / n - mean * mean);
  CHECK(std::abs(mean) < 0.01);
  CHECK(stddev == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("gaussian_from_seed is a pure function of the seed") {
  CHECK(gaussian_from_seed(7) == gaussian_from_seed(7));
  CHECK(gaussian_from_seed(7) != gaussian_from_seed(8));
}
