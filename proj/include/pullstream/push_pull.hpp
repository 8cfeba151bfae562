#pragma once

#include <cmath>
#include <stdexcept>

#include "pullstream/params.hpp"
#include "pullstream/profile.hpp"

namespace pullstream {

struct PushPullResult {
  DiffusionProfile profile;
  int iterations = 0;    // outer fixed-point iterations on P_{d+1}
  double residual = 0.0; // last |sweep(P_{d+1}) - P_{d+1}|
  bool converged = false;
};

namespace detail {

// Forward sweep of the segmented recursion given an estimate rho of
// P_{d+1}. Push region [1, d]: blind latest-first push, one upload per
// idle peer, Poissonized arrivals. Pull region [d+1, n-1]: greedy blind
// pull; its own forward-looking products are settled by inner sweeps.
inline void push_pull_sweep(DiffusionProfile& prof, int n, int d, double p1, double rho) {
  prof.at(1) = p1;
  const int push_top = std::min(d, n - 1);
  for (int i = 1; i <= push_top; ++i) {
    double cpush = 1.0 - rho;
    for (int k = 1; k < i; ++k) cpush *= 1.0 - prof.at(k);
    prof.at(i + 1) = prof.at(i) + (1.0 - prof.at(i)) * (1.0 - std::exp(-prof.at(i) * cpush));
  }
  const double pull_hit = 1.0 - std::exp(-1.0);
  for (int sweep = 0; sweep < 5000; ++sweep) {
    double delta = 0.0;
    for (int i = d + 1; i <= n - 1; ++i) {
      double c = 1.0;
      for (int k = i + 1; k <= n - 1; ++k) c *= prof.at(k);
      const double z = c * (1.0 - prof.at(i)) * pull_hit;
      const double next = prof.at(i) + std::min(prof.at(i) * z, 1.0 - prof.at(i));
      delta = std::max(delta, std::abs(next - prof.at(i + 1)));
      prof.at(i + 1) = next;
    }
    if (delta < 1e-13) break;
  }
}

}  // namespace detail

/// Pure push profile: the d = n boundary case of the push-pull scheme,
/// where no pull region exists and nothing ever answers a pull.
inline DiffusionProfile push_profile(int N, int n) {
  DiffusionProfile prof;
  prof.values.assign(static_cast<std::size_t>(n), 0.0);
  detail::push_pull_sweep(prof, n, n, 1.0 / N, 0.0);
  return prof;
}

/// Segmented push-pull profile with buffer split at d. The push region
/// needs P_{d+1} before the pull region produces it, so the profile is
/// closed by damped fixed-point iteration on that one value, seeded from
/// a pure-push sweep.
inline PushPullResult push_pull_profile(const SystemParams& params,
                                        double lambda = 0.5, double tol = 1e-10,
                                        int max_iterations = 10000) {
  params.validate();
  const int n = params.buffer_size;
  const int d = params.split_point;
  const double p1 = 1.0 / params.overlay_size;

  PushPullResult result;
  result.profile.values.assign(static_cast<std::size_t>(n), 0.0);

  if (d >= n) {
    detail::push_pull_sweep(result.profile, n, n, p1, 0.0);
    result.iterations = 1;
    result.converged = true;
    return result;
  }

  DiffusionProfile seed;
  seed.values.assign(static_cast<std::size_t>(n), 0.0);
  detail::push_pull_sweep(seed, n, n, p1, 0.0);
  double rho = seed.at(d + 1);

  for (int it = 1; it <= max_iterations; ++it) {
    detail::push_pull_sweep(result.profile, n, d, p1, rho);
    const double produced = result.profile.at(d + 1);
    result.iterations = it;
    result.residual = std::abs(produced - rho);
    if (result.residual < tol) {
      result.converged = true;
      break;
    }
    rho = (1.0 - lambda) * rho + lambda * produced;
  }
  return result;
}

}  // namespace pullstream
