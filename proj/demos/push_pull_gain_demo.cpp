// Sweeps the push/pull split position d and reports the playout
// probability of each split against the pure-push baseline.
#include <cstdio>

#include "pullstream/pullstream.hpp"

int main() {
  using namespace pullstream;
  SystemParams params{100, 40, 10, 1, 40};
  const double push_p40 = push_profile(params.overlay_size, params.buffer_size).playout_probability();
  std::printf("pure push playout probability: %.4f\n", push_p40);
  std::printf("%4s %10s %8s %6s\n", "d", "playout", "gain%", "iters");
  for (int d = 1; d <= params.buffer_size; ++d) {
    params.split_point = d;
    const PushPullResult r = push_pull_profile(params);
    const double p40 = r.profile.playout_probability();
    std::printf("%4d %10.4f %8.1f %6d%s\n", d, p40, (p40 / push_p40 - 1.0) * 100.0,
                r.iterations, r.converged ? "" : " (no convergence)");
  }
  return 0;
}
