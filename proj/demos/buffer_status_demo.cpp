// Prints the model-vs-simulation buffer occupancy for one scheme so the
// two columns can be eyeballed side by side.
#include <cstdio>

#include "pullstream/pullstream.hpp"

int main() {
  using namespace pullstream;
  SimConfig config;
  config.params = {100, 40, 10, 1, 20};
  config.spec = SchemeSpec::make(Scheme::peer_first, Strategy::latest_first,
                                 PeerSelection::random_useful, ReplyMode::single);
  config.seed = 42;

  const ModelResult model = iterate_profile(config.params, config.spec);
  const SimResult sim = run_simulation(config);

  std::printf("peer-first / latest-first, N=100 n=40 v=10 U=1\n");
  std::printf("%8s %10s %10s\n", "position", "model", "simulated");
  for (int i = 1; i <= config.params.buffer_size; ++i)
    std::printf("%8d %10.4f %10.4f\n", i, model.profile.at(i),
                sim.profile.values[static_cast<std::size_t>(i) - 1]);

  const ErrorSummary err = compare(model.profile, sim.profile);
  std::printf("mae=%.4f max=%.4f (single seed)\n", err.mean_abs_error, err.max_abs_error);
  return 0;
}
