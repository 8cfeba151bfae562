#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "pullstream/push_pull.hpp"

using namespace pullstream;

TEST_CASE("split at the buffer end reproduces the pure push profile") {
  SystemParams params{100, 40, 10, 1, 40};
  const auto pp = push_pull_profile(params);
  const auto push = push_profile(100, 40);
  REQUIRE(pp.converged);
  for (int i = 1; i <= 40; ++i) CHECK(pp.profile.at(i) == push.at(i));
}

TEST_CASE("split at one leaves a pull-only tail") {
  // past the single push step, the tail must follow the blind greedy pull
  // recursion seeded with the same P_2
  SystemParams params{100, 40, 10, 1, 1};
  const auto pp = push_pull_profile(params);
  REQUIRE(pp.converged);

  const int n = 40;
  std::vector<double> tail(static_cast<std::size_t>(n) + 1, 0.0);
  tail[2] = pp.profile.at(2);
  const double hit = 1.0 - std::exp(-1.0);
  for (int pass = 0; pass < 5000; ++pass) {
    double delta = 0.0;
    for (int i = 2; i <= n - 1; ++i) {
      double c = 1.0;
      for (int k = i + 1; k <= n - 1; ++k) c *= tail[static_cast<std::size_t>(k)];
      const double z = c * (1.0 - tail[static_cast<std::size_t>(i)]) * hit;
      const double next = tail[static_cast<std::size_t>(i)] +
                          std::min(tail[static_cast<std::size_t>(i)] * z,
                                   1.0 - tail[static_cast<std::size_t>(i)]);
      delta = std::max(delta, std::abs(next - tail[static_cast<std::size_t>(i) + 1]));
      tail[static_cast<std::size_t>(i) + 1] = next;
    }
    if (delta < 1e-14) break;
  }
  for (int i = 2; i <= n; ++i)
    CHECK(pp.profile.at(i) == Catch::Approx(tail[static_cast<std::size_t>(i)]).margin(1e-9));
}

TEST_CASE("fixed point converges for every split position") {
  SystemParams params{100, 40, 10, 1, 1};
  for (int d = 1; d <= 40; ++d) {
    params.split_point = d;
    const auto r = push_pull_profile(params);
    INFO("d=" << d);
    CHECK(r.converged);
    CHECK(r.iterations < 10000);
    CHECK(r.residual < 1e-10);
    for (int i = 1; i < 40; ++i) {
      CHECK(r.profile.at(i) <= r.profile.at(i + 1) + 1e-12);
      CHECK(r.profile.at(i + 1) <= 1.0);
    }
  }
}

TEST_CASE("converged split value is self-consistent") {
  SystemParams params{100, 40, 10, 1, 20};
  const auto r = push_pull_profile(params);
  REQUIRE(r.converged);
  // re-running one sweep with the converged P_{d+1} must reproduce it
  const auto again = push_pull_profile(params);
  for (int i = 1; i <= 40; ++i)
    CHECK(r.profile.at(i) == Catch::Approx(again.profile.at(i)).margin(1e-10));
  CHECK(r.residual < 1e-10);
}

TEST_CASE("a starved iteration budget is reported, not hidden") {
  SystemParams params{100, 40, 10, 1, 20};
  const auto r = push_pull_profile(params, 0.5, 1e-10, 1);
  CHECK_FALSE(r.converged);
  CHECK(r.iterations == 1);
  CHECK(r.residual > 0.0);
}

TEST_CASE("mid-buffer split beats pure push at playout") {
  SystemParams params{100, 40, 10, 1, 20};
  const auto pp = push_pull_profile(params);
  const auto push = push_profile(100, 40);
  REQUIRE(pp.converged);
  const double gain = pp.profile.playout_probability() / push.playout_probability() - 1.0;
  CHECK(gain >= 0.10);
}
