#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "pullstream/binomial.hpp"

using namespace pullstream;

namespace {

// Brute-force oracle: enumerate all 2^m outcomes.
double brute_expected_inverse_count(const std::vector<double>& probs) {
  const std::size_t m = probs.size();
  double total = 0.0;
  for (std::size_t mask = 0; mask < (1u << m); ++mask) {
    double pr = 1.0;
    int count = 0;
    for (std::size_t b = 0; b < m; ++b) {
      if (mask >> b & 1u) {
        pr *= probs[b];
        ++count;
      } else {
        pr *= 1.0 - probs[b];
      }
    }
    total += pr / (count + 1);
  }
  return total;
}

}  // namespace

TEST_CASE("binomial coefficients are exact for small arguments") {
  CHECK(binomial_coefficient(0, 0) == 1.0);
  CHECK(binomial_coefficient(5, 2) == 10.0);
  CHECK(binomial_coefficient(10, 10) == 1.0);
  CHECK(binomial_coefficient(10, 11) == 0.0);
  CHECK(binomial_coefficient(20, 10) == 184756.0);
  CHECK(binomial_coefficient(64, 32) == Catch::Approx(1832624140942590534.0).epsilon(1e-12));
}

TEST_CASE("poisson binomial pmf sums to one") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<double> probs(static_cast<std::size_t>(rng() % 15));
    for (double& p : probs) p = unif(rng);
    const auto pmf = poisson_binomial_pmf(probs);
    REQUIRE(pmf.size() == probs.size() + 1);
    double sum = 0.0;
    for (double x : pmf) {
      CHECK(x >= 0.0);
      sum += x;
    }
    CHECK(sum == Catch::Approx(1.0).margin(1e-12));
  }
}

TEST_CASE("expected_inverse_count handles the degenerate inputs") {
  CHECK(expected_inverse_count({}) == 1.0);
  const std::vector<double> one{1.0};
  CHECK(expected_inverse_count(one) == Catch::Approx(0.5).margin(1e-15));
  const std::vector<double> half{0.5, 0.5};
  // 0.25*1 + 0.5*(1/2) + 0.25*(1/3)
  CHECK(expected_inverse_count(half) == Catch::Approx(0.25 + 0.25 + 0.25 / 3.0).margin(1e-15));
}

TEST_CASE("expected_inverse_count matches subset enumeration") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double worst = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<double> probs(static_cast<std::size_t>(rng() % 13));
    for (double& p : probs) p = unif(rng);
    const double dp = expected_inverse_count(probs);
    const double brute = brute_expected_inverse_count(probs);
    worst = std::max(worst, std::abs(dp - brute));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("out-of-range probabilities are rejected") {
  const std::vector<double> bad{0.5, 1.5};
  CHECK_THROWS_AS(expected_inverse_count(bad), std::invalid_argument);
  const std::vector<double> neg{-0.1};
  CHECK_THROWS_AS(poisson_binomial_pmf(neg), std::invalid_argument);
}
