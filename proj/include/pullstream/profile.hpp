#pragma once

#include <optional>
#include <vector>

namespace pullstream {

/// Per-position presence probabilities P_1..P_n (position 1 newest,
/// position n played out). Also used as a per-slot series in the
/// single-chunk analysis.
struct DiffusionProfile {
  std::vector<double> values;

  int positions() const { return static_cast<int>(values.size()); }
  double at(int pos) const { return values[static_cast<std::size_t>(pos) - 1]; }
  double& at(int pos) { return values[static_cast<std::size_t>(pos) - 1]; }
  double playout_probability() const { return values.back(); }
};

/// Intermediate quantities behind one position's success probability.
/// Which fields are meaningful depends on the scheme; unused ones stay 0.
struct PullRates {
  double chunk_weight = 0.0;  // c_i for the scheme's selection mode
  double peer_prob = 0.0;     // p_i
  double request_prob = 0.0;  // r_i (chunk-first only)
  double choose_prob = 0.0;   // w_i (peer-first)
  double useful_prob = 0.0;   // u_i (peer-first, random useful)
  double success = 0.0;       // Z_i; an expected count (may exceed 1) in multi-reply mode
};

struct PlayoutMetrics {
  double playout_probability = 0.0;
  std::optional<int> playout_delay;  // smallest position reaching the target
};

inline PlayoutMetrics playout_metrics(const DiffusionProfile& profile, double target) {
  PlayoutMetrics m;
  m.playout_probability = profile.values.back();
  for (int i = 1; i <= profile.positions(); ++i) {
    if (profile.at(i) >= target) {
      m.playout_delay = i;
      break;
    }
  }
  return m;
}

}  // namespace pullstream
