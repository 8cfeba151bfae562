#pragma once

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pullstream/model.hpp"
#include "pullstream/push_pull.hpp"
#include "pullstream/report.hpp"
#include "pullstream/sim.hpp"

namespace pullstream {

inline DiffusionProfile model_profile_for(const SystemParams& params, const SchemeSpec& spec,
                                          int* iterations = nullptr, double* residual = nullptr) {
  if (spec.scheme == Scheme::push_pull) {
    const PushPullResult r = push_pull_profile(params);
    if (iterations) *iterations = r.iterations;
    if (residual) *residual = r.residual;
    if (!r.converged) throw std::runtime_error("push-pull fixed point did not converge");
    return r.profile;
  }
  const ModelResult r = iterate_profile(params, spec);
  if (iterations) *iterations = r.iterations;
  if (residual) *residual = r.residual;
  return r.profile;
}

inline ReplicatedProfile replicated_simulation(const SimConfig& base, int replicates) {
  if (replicates < 1) throw std::invalid_argument("replicates must be >= 1");
  std::vector<EmpiricalProfile> runs;
  runs.reserve(static_cast<std::size_t>(replicates));
  for (int k = 0; k < replicates; ++k) {
    SimConfig c = base;
    c.seed = base.seed + static_cast<std::uint64_t>(k);
    runs.push_back(run_simulation(c).profile);
  }
  return aggregate_replicates(runs);
}

struct RunRequest {
  std::string label;
  SimConfig config;
  bool run_model = true;
  bool run_sim = false;
  int replicates = 5;
  double target = 0.9;
};

inline RunReport execute(const RunRequest& req) {
  RunReport report;
  report.label = req.label;
  report.config = req.config;
  if (req.run_model) {
    int iters = 0;
    double resid = 0.0;
    report.model = model_profile_for(req.config.params, req.config.spec, &iters, &resid);
    if (req.config.spec.scheme == Scheme::push_pull) {
      report.fixed_point_iterations = iters;
      report.fixed_point_residual = resid;
    }
  }
  if (req.run_sim) report.empirical = replicated_simulation(req.config, req.replicates);
  if (report.model)
    report.metrics = playout_metrics(*report.model, req.target);
  else if (report.empirical) {
    DiffusionProfile p{report.empirical->mean};
    report.metrics = playout_metrics(p, req.target);
  }
  if (report.model && report.empirical)
    report.error = compare(report.model->values, report.empirical->mean);
  return report;
}

// ---- parameter sweeps ----

enum class SweepParameter { neighbor_count, reply_number, split_point, playout_delay_target };

inline SweepParameter parse_sweep_parameter(const std::string& s) {
  if (s == "v" || s == "neighbor_count") return SweepParameter::neighbor_count;
  if (s == "U" || s == "reply_number") return SweepParameter::reply_number;
  if (s == "d" || s == "split_point") return SweepParameter::split_point;
  if (s == "target" || s == "playout_delay_target") return SweepParameter::playout_delay_target;
  throw std::invalid_argument("unknown sweep parameter '" + s + "' (expected v|U|d|target)");
}

inline std::string_view to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::neighbor_count: return "v";
    case SweepParameter::reply_number: return "U";
    case SweepParameter::split_point: return "d";
    case SweepParameter::playout_delay_target: return "target";
  }
  return "?";
}

inline std::string format_value(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

struct SweepSpec {
  SweepParameter parameter = SweepParameter::reply_number;
  std::vector<double> values;
  SimConfig base;
  bool run_model = true;
  bool run_sim = false;
  int replicates = 5;
  double target = 0.9;
};

inline std::vector<RunReport> sweep(const SweepSpec& spec) {
  if (spec.values.empty()) throw std::invalid_argument("sweep: empty value list");
  std::vector<RunReport> reports;
  reports.reserve(spec.values.size());
  for (double value : spec.values) {
    RunRequest req;
    req.config = spec.base;
    req.run_model = spec.run_model;
    req.run_sim = spec.run_sim;
    req.replicates = spec.replicates;
    req.target = spec.target;
    const int iv = static_cast<int>(std::llround(value));
    switch (spec.parameter) {
      case SweepParameter::neighbor_count:
        req.config.params.neighbor_count = iv;
        break;
      case SweepParameter::reply_number:
        req.config.params.reply_number = iv;
        req.config.spec.reply_mode = iv > 1 ? ReplyMode::multi : ReplyMode::single;
        break;
      case SweepParameter::split_point:
        req.config.params.split_point = iv;
        break;
      case SweepParameter::playout_delay_target:
        if (!(value > 0.0 && value <= 1.0))
          throw std::invalid_argument("sweep: playout target must be in (0,1]");
        req.target = value;
        break;
    }
    req.label = std::string(to_string(spec.base.spec.scheme)) + "-" +
                std::string(to_string(spec.base.spec.strategy)) + "-" +
                std::string(to_string(spec.parameter)) +
                (spec.parameter == SweepParameter::playout_delay_target
                     ? format_value(value)
                     : std::to_string(iv));
    reports.push_back(execute(req));
  }
  return reports;
}

// ---- figure presets ----
//
// Reproduce the experiment grids behind the reference figures at the
// standard scale N=100, n=40, v=10. Every preset pins its seed to its
// index in the list below, so the emitted CSVs are stable.

inline const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"fig3", "fig4a", "fig4b", "fig5",
                                                 "fig6", "fig7a", "fig7b"};
  return names;
}

namespace detail {

inline SimConfig preset_base(std::uint64_t seed) {
  SimConfig c;
  c.params = {100, 40, 10, 1, 20};
  c.slots = 2500;
  c.warmup = 500;
  c.seed = seed;
  return c;
}

// The scheme definitions pick a useful peer for chunk-first and peer-first
// (the chosen neighbor can serve by construction) and a blind peer for the
// map-less epidemic scheme.
inline const std::vector<std::pair<Scheme, PeerSelection>>& scheme_defaults() {
  static const std::vector<std::pair<Scheme, PeerSelection>> d = {
      {Scheme::chunk_first, PeerSelection::random_useful},
      {Scheme::peer_first, PeerSelection::random_useful},
      {Scheme::epidemic, PeerSelection::random_peer}};
  return d;
}

inline std::string combo_label(const SchemeSpec& spec, int U) {
  std::string s = std::string(to_string(spec.scheme)) + "-" + std::string(to_string(spec.strategy));
  if (U != 1) s += "-U" + std::to_string(U);
  return s;
}

}  // namespace detail

inline std::vector<RunReport> figure_preset(const std::string& name) {
  const auto& names = preset_names();
  std::uint64_t seed = 0;
  {
    std::size_t idx = 0;
    while (idx < names.size() && names[idx] != name) ++idx;
    if (idx == names.size()) throw std::invalid_argument("unknown preset '" + name + "'");
    seed = idx;
  }
  std::vector<RunReport> reports;
  const std::vector<Strategy> strategies = {Strategy::latest_first, Strategy::greedy,
                                            Strategy::random};

  if (name == "fig3" || name == "fig5") {
    const int U = name == "fig5" ? 4 : 1;
    for (Strategy st : strategies) {
      for (const auto& [scheme, ps] : detail::scheme_defaults()) {
        if (U > 1 && scheme == Scheme::epidemic) continue;  // U=4 grid covers CF and PF only
        RunRequest req;
        req.config = detail::preset_base(seed);
        req.config.params.reply_number = U;
        req.config.spec = SchemeSpec::make(scheme, st, ps,
                                           U > 1 ? ReplyMode::multi : ReplyMode::single);
        req.run_sim = true;
        req.label = detail::combo_label(req.config.spec, U);
        reports.push_back(execute(req));
      }
    }
  } else if (name == "fig4a") {
    for (const auto& [scheme, ps] : detail::scheme_defaults()) {
      if (scheme == Scheme::epidemic) continue;
      for (Strategy st : strategies) {
        RunRequest req;
        req.config = detail::preset_base(seed);
        req.config.spec = SchemeSpec::make(scheme, st, ps, ReplyMode::single);
        req.label = detail::combo_label(req.config.spec, 1);
        reports.push_back(execute(req));
      }
    }
  } else if (name == "fig4b") {
    for (const auto& [scheme, ps] : detail::scheme_defaults()) {
      if (scheme == Scheme::epidemic) continue;
      for (Strategy st : strategies) {
        SweepSpec sw;
        sw.parameter = SweepParameter::neighbor_count;
        for (int v = 4; v <= 30; v += 2) sw.values.push_back(v);
        sw.base = detail::preset_base(seed);
        sw.base.spec = SchemeSpec::make(scheme, st, ps, ReplyMode::single);
        auto points = sweep(sw);
        reports.insert(reports.end(), points.begin(), points.end());
      }
    }
  } else if (name == "fig6") {
    for (const auto& [scheme, ps] : detail::scheme_defaults()) {
      if (scheme == Scheme::epidemic) continue;
      for (Strategy st : strategies) {
        SweepSpec sw;
        sw.parameter = SweepParameter::reply_number;
        sw.values = {1, 2, 3, 4, 5, 6};
        sw.base = detail::preset_base(seed);
        sw.base.spec = SchemeSpec::make(scheme, st, ps, ReplyMode::single);
        auto points = sweep(sw);
        reports.insert(reports.end(), points.begin(), points.end());
      }
    }
  } else if (name == "fig7a") {
    SweepSpec sw;
    sw.parameter = SweepParameter::split_point;
    for (int d = 1; d <= 40; ++d) sw.values.push_back(d);
    sw.base = detail::preset_base(seed);
    sw.base.spec = SchemeSpec::make(Scheme::push_pull, Strategy::greedy,
                                    PeerSelection::random_peer, ReplyMode::single);
    reports = sweep(sw);
  } else {  // fig7b
    for (int d : {40, 20}) {
      RunRequest req;
      req.config = detail::preset_base(seed);
      req.config.params.split_point = d;
      req.config.spec = SchemeSpec::make(Scheme::push_pull, Strategy::greedy,
                                         PeerSelection::random_peer, ReplyMode::single);
      req.run_sim = true;
      req.label = d == 40 ? "push" : "pushpull-d20";
      reports.push_back(execute(req));
    }
  }
  return reports;
}

}  // namespace pullstream
