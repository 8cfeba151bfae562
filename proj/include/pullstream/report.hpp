#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pullstream/profile.hpp"
#include "pullstream/sim.hpp"

namespace pullstream {

struct ErrorSummary {
  double mean_abs_error = 0.0;
  double max_abs_error = 0.0;
  std::vector<double> residuals;  // model - empirical, per position
};

inline ErrorSummary compare(const std::vector<double>& model,
                            const std::vector<double>& empirical) {
  if (model.size() != empirical.size())
    throw std::invalid_argument("compare: profiles have different lengths");
  ErrorSummary e;
  e.residuals.reserve(model.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < model.size(); ++i) {
    const double r = model[i] - empirical[i];
    e.residuals.push_back(r);
    sum += std::abs(r);
    e.max_abs_error = std::max(e.max_abs_error, std::abs(r));
  }
  e.mean_abs_error = model.empty() ? 0.0 : sum / static_cast<double>(model.size());
  return e;
}

inline ErrorSummary compare(const DiffusionProfile& model, const EmpiricalProfile& empirical) {
  return compare(model.values, empirical.values);
}

/// Mean and across-seed standard deviation of replicated simulation runs.
struct ReplicatedProfile {
  std::vector<double> mean;
  std::vector<double> stddev;
  long long sample_count = 0;  // per replicate
  int replicates = 0;
};

inline ReplicatedProfile aggregate_replicates(const std::vector<EmpiricalProfile>& runs) {
  if (runs.empty()) throw std::invalid_argument("aggregate_replicates: no runs");
  const std::size_t n = runs.front().values.size();
  ReplicatedProfile agg;
  agg.replicates = static_cast<int>(runs.size());
  agg.sample_count = runs.front().sample_count;
  agg.mean.assign(n, 0.0);
  agg.stddev.assign(n, 0.0);
  for (const auto& r : runs)
    for (std::size_t i = 0; i < n; ++i) agg.mean[i] += r.values[i];
  for (double& m : agg.mean) m /= static_cast<double>(runs.size());
  if (runs.size() > 1) {
    for (const auto& r : runs)
      for (std::size_t i = 0; i < n; ++i) {
        const double dev = r.values[i] - agg.mean[i];
        agg.stddev[i] += dev * dev;
      }
    for (double& s : agg.stddev) s = std::sqrt(s / static_cast<double>(runs.size() - 1));
  }
  return agg;
}

/// One experiment's outcome: the configuration, whichever profiles were
/// produced, playout metrics, and the model-vs-simulation gap when both
/// sides exist.
struct RunReport {
  std::string label;
  SimConfig config;  // echo; model-only runs ignore slots/warmup/seed
  std::optional<DiffusionProfile> model;
  std::optional<ReplicatedProfile> empirical;
  PlayoutMetrics metrics;  // from the model profile when present, else empirical mean
  std::optional<ErrorSummary> error;
  // push-pull solver info, when applicable
  std::optional<int> fixed_point_iterations;
  std::optional<double> fixed_point_residual;
};

}  // namespace pullstream
