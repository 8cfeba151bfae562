#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pullstream/csv.hpp"
#include "pullstream/harness.hpp"

namespace pullstream::cli {

struct Options {
  int peers = 100;          // N
  int buffer = 40;          // n
  int neighbors = 10;       // v
  int replies = 1;          // U
  int split = 20;           // d
  std::string scheme = "pf";
  std::string strategy = "latest";
  std::string peer_selection;  // empty = scheme default
  std::string reply_mode;      // empty = single when U == 1, multi otherwise
  int slots = 2500;
  int warmup = 500;
  std::uint64_t seed = 0;
  double target = 0.9;
  int replicates = 0;  // 0 = subcommand default
  std::string out = ".";
  std::string config_path;
  bool force = false;
  // sweep-only
  std::string sweep_param;
  std::string sweep_values;
  bool with_sim = false;
  // preset-only
  std::string preset_name;
};

namespace detail {

inline SimConfig build_config(const Options& o) {
  SimConfig c;
  c.params.overlay_size = o.peers;
  c.params.buffer_size = o.buffer;
  c.params.neighbor_count = o.neighbors;
  c.params.reply_number = o.replies;
  c.params.split_point = o.split;
  const Scheme scheme = parse_scheme(o.scheme);
  PeerSelection ps;
  if (!o.peer_selection.empty()) {
    ps = parse_peer_selection(o.peer_selection);
  } else {
    ps = (scheme == Scheme::epidemic || scheme == Scheme::push_pull)
             ? PeerSelection::random_peer
             : PeerSelection::random_useful;
  }
  ReplyMode rm = o.replies > 1 ? ReplyMode::multi : ReplyMode::single;
  if (!o.reply_mode.empty()) rm = parse_reply_mode(o.reply_mode);
  if (rm == ReplyMode::single && o.replies > 1)
    throw std::invalid_argument("reply_mode single contradicts U > 1");
  c.spec = SchemeSpec::make(scheme, parse_strategy(o.strategy), ps, rm);
  c.slots = o.slots;
  c.warmup = o.warmup;
  c.seed = o.seed;
  c.params.validate();
  c.validate();
  return c;
}

inline void apply_config_file(const Options& defaults, Options& o, CLI::App* sub) {
  if (o.config_path.empty()) return;
  const auto kv = parse_config_file(o.config_path);
  auto given = [&](const std::string& flag) {
    const CLI::Option* opt = sub->get_option_no_throw(flag);
    return opt != nullptr && opt->count() > 0;
  };
  for (const auto& [key, value] : kv) {
    if (key == "N") { if (!given("-N")) o.peers = std::stoi(value); }
    else if (key == "n") { if (!given("-n")) o.buffer = std::stoi(value); }
    else if (key == "v") { if (!given("-v")) o.neighbors = std::stoi(value); }
    else if (key == "U") { if (!given("-U")) o.replies = std::stoi(value); }
    else if (key == "d") { if (!given("-d")) o.split = std::stoi(value); }
    else if (key == "scheme") { if (!given("--scheme")) o.scheme = value; }
    else if (key == "strategy") { if (!given("--strategy")) o.strategy = value; }
    else if (key == "peer-selection") { if (!given("--peer-selection")) o.peer_selection = value; }
    else if (key == "reply-mode") { if (!given("--reply-mode")) o.reply_mode = value; }
    else if (key == "slots") { if (!given("--slots")) o.slots = std::stoi(value); }
    else if (key == "warmup") { if (!given("--warmup")) o.warmup = std::stoi(value); }
    else if (key == "seed") { if (!given("--seed")) o.seed = std::stoull(value); }
    else if (key == "target") { if (!given("--target")) o.target = std::stod(value); }
    else throw std::invalid_argument("unknown config key '" + key + "' in " + o.config_path);
  }
  (void)defaults;
}

inline void write_output(const std::string& dir, const std::string& name,
                         const std::string& content, bool force) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path path = std::filesystem::path(dir) / name;
  if (std::filesystem::exists(path) && !force)
    throw std::invalid_argument("output file exists (pass --force to overwrite): " + path.string());
  write_file(path.string(), content);
}

inline std::string empirical_csv_of(const ReplicatedProfile& rp) {
  return empirical_csv(rp.mean, rp.stddev, rp.sample_count);
}

inline std::string report_summary_header() {
  return "label,scheme,strategy,peer_selection,U,v,d,playout_probability,playout_delay,"
         "mae,max_abs_error\n";
}

inline std::string report_summary_row(const RunReport& r) {
  std::string row = r.label;
  row += ',';
  row += to_string(r.config.spec.scheme);
  row += ',';
  row += to_string(r.config.spec.strategy);
  row += ',';
  row += to_string(r.config.spec.peer_selection);
  row += ',' + std::to_string(r.config.params.reply_number);
  row += ',' + std::to_string(r.config.params.neighbor_count);
  row += ',' + std::to_string(r.config.params.split_point);
  row += ',' + format_fixed(r.metrics.playout_probability);
  row += ',';
  if (r.metrics.playout_delay) row += std::to_string(*r.metrics.playout_delay);
  row += ',';
  if (r.error) row += format_fixed(r.error->mean_abs_error);
  row += ',';
  if (r.error) row += format_fixed(r.error->max_abs_error);
  row += '\n';
  return row;
}

inline int run_model(const Options& o) {
  const SimConfig c = build_config(o);
  int iters = 0;
  double resid = 0.0;
  const DiffusionProfile prof = model_profile_for(c.params, c.spec, &iters, &resid);
  write_output(o.out, "model_profile.csv", profile_csv(prof), o.force);
  const PlayoutMetrics m = playout_metrics(prof, o.target);
  std::cout << "model " << to_string(c.spec.scheme) << "-" << to_string(c.spec.strategy)
            << " playout_probability=" << format_fixed(m.playout_probability)
            << " playout_delay="
            << (m.playout_delay ? std::to_string(*m.playout_delay) : std::string("none"));
  if (c.spec.scheme == Scheme::push_pull)
    std::cout << " fixed_point_iterations=" << iters << " residual=" << resid;
  std::cout << "\n";
  return 0;
}

inline int run_sim(const Options& o) {
  const SimConfig c = build_config(o);
  const int reps = o.replicates > 0 ? o.replicates : 1;
  const ReplicatedProfile rp = replicated_simulation(c, reps);
  write_output(o.out, "empirical_profile.csv", empirical_csv_of(rp), o.force);
  DiffusionProfile mean{rp.mean};
  const PlayoutMetrics m = playout_metrics(mean, o.target);
  std::cout << "sim " << to_string(c.spec.scheme) << "-" << to_string(c.spec.strategy)
            << " replicates=" << reps
            << " playout_probability=" << format_fixed(m.playout_probability) << "\n";
  return 0;
}

inline int run_compare(const Options& o) {
  const SimConfig c = build_config(o);
  RunRequest req;
  req.config = c;
  req.run_model = true;
  req.run_sim = true;
  req.replicates = o.replicates > 0 ? o.replicates : 5;
  req.target = o.target;
  req.label = "compare";
  const RunReport report = execute(req);
  write_output(o.out, "model_profile.csv", profile_csv(*report.model), o.force);
  write_output(o.out, "empirical_profile.csv", empirical_csv_of(*report.empirical), o.force);
  write_output(o.out, "error_summary.csv",
               error_summary_csv(report.error->mean_abs_error, report.error->max_abs_error),
               o.force);
  std::cout << "compare " << to_string(c.spec.scheme) << "-" << to_string(c.spec.strategy)
            << " mae=" << format_fixed(report.error->mean_abs_error)
            << " max_abs_error=" << format_fixed(report.error->max_abs_error) << "\n";
  return 0;
}

inline int run_sweep(const Options& o) {
  if (o.sweep_param.empty() || o.sweep_values.empty())
    throw std::invalid_argument("sweep requires --param and --values");
  SweepSpec sw;
  sw.parameter = parse_sweep_parameter(o.sweep_param);
  for (std::size_t pos = 0; pos < o.sweep_values.size();) {
    const auto comma = o.sweep_values.find(',', pos);
    const auto end = comma == std::string::npos ? o.sweep_values.size() : comma;
    sw.values.push_back(std::stod(o.sweep_values.substr(pos, end - pos)));
    pos = end + 1;
  }
  sw.base = build_config(o);
  sw.run_sim = o.with_sim;
  sw.replicates = o.replicates > 0 ? o.replicates : 5;
  sw.target = o.target;
  const auto reports = sweep(sw);

  std::string index = "point,parameter,value,label,playout_probability,playout_delay,"
                      "model_csv,empirical_csv\n";
  for (std::size_t k = 0; k < reports.size(); ++k) {
    const RunReport& r = reports[k];
    const std::string stem = "sweep_" + r.label;
    std::string model_name, sim_name;
    if (r.model) {
      model_name = stem + "_model.csv";
      write_output(o.out, model_name, profile_csv(*r.model), o.force);
    }
    if (r.empirical) {
      sim_name = stem + "_sim.csv";
      write_output(o.out, sim_name, empirical_csv_of(*r.empirical), o.force);
    }
    index += std::to_string(k) + ',' + std::string(to_string(sw.parameter)) + ',' +
             format_value(sw.values[k]) + ',' + r.label + ',' +
             format_fixed(r.metrics.playout_probability) + ',' +
             (r.metrics.playout_delay ? std::to_string(*r.metrics.playout_delay) : std::string()) +
             ',' + model_name + ',' + sim_name + '\n';
  }
  write_output(o.out, "sweep_index.csv", index, o.force);
  std::cout << "sweep " << to_string(sw.parameter) << " points=" << reports.size() << "\n";
  return 0;
}

inline int run_preset(const Options& o) {
  const auto reports = figure_preset(o.preset_name);
  std::string summary = report_summary_header();
  for (const RunReport& r : reports) {
    const std::string stem = o.preset_name + "_" + r.label;
    if (r.model) write_output(o.out, stem + "_model.csv", profile_csv(*r.model), o.force);
    if (r.empirical)
      write_output(o.out, stem + "_sim.csv", empirical_csv_of(*r.empirical), o.force);
    summary += report_summary_row(r);
  }
  write_output(o.out, o.preset_name + "_summary.csv", summary, o.force);
  if (o.preset_name == "fig7b" && reports.size() == 2) {
    const double push = reports[0].metrics.playout_probability;
    const double pushpull = reports[1].metrics.playout_probability;
    const double gain = push > 0.0 ? (pushpull / push - 1.0) * 100.0 : 0.0;
    write_output(o.out, "fig7b_gain.csv",
                 "metric,value\nrelative_gain_percent," + format_fixed(gain) + "\n", o.force);
    std::cout << "preset fig7b: push=" << format_fixed(push)
              << " pushpull=" << format_fixed(pushpull) << " gain=" << format_fixed(gain)
              << "%\n";
  } else {
    std::cout << "preset " << o.preset_name << ": " << reports.size() << " runs\n";
  }
  return 0;
}

inline void add_common_options(CLI::App* sub, Options& o, bool sim_flags) {
  sub->add_option("-N,--N", o.peers, "overlay size (peers, excluding the source)");
  sub->add_option("-n,--n", o.buffer, "buffer size (positions)");
  sub->add_option("-v,--v", o.neighbors, "neighbor count");
  sub->add_option("-U,--U", o.replies, "reply number (uploads per peer per slot)");
  sub->add_option("-d,--d", o.split, "push/pull split position (push-pull scheme)");
  sub->add_option("--scheme", o.scheme, "cf|pf|ep|pushpull");
  sub->add_option("--strategy", o.strategy, "latest|greedy|random");
  sub->add_option("--peer-selection", o.peer_selection, "random|useful (default per scheme)");
  sub->add_option("--reply-mode", o.reply_mode, "single|multi (default follows U)");
  sub->add_option("--target", o.target, "playout-delay target probability");
  sub->add_option("--config", o.config_path, "key = value config file");
  sub->add_option("-o,--out", o.out, "output directory");
  sub->add_flag("--force", o.force, "overwrite existing output files");
  if (sim_flags) {
    sub->add_option("--slots", o.slots, "total simulated slots");
    sub->add_option("--warmup", o.warmup, "slots discarded before measuring");
    sub->add_option("--seed", o.seed, "base RNG seed");
    sub->add_option("--replicates", o.replicates, "simulation replicates (seeds seed..seed+k-1)");
  }
}

}  // namespace detail

/// Entry point behind main(); returns the process exit code.
/// 0 = success, 1 = validation/usage error, 2 = runtime failure.
inline int dispatch(int argc, const char* const* argv) {
  CLI::App app{"analysis toolkit for pull-based P2P live streaming schemes"};
  app.require_subcommand(1);
  Options o;
  const Options defaults = o;

  CLI::App* model = app.add_subcommand("model", "iterate a diffusion profile and write it as CSV");
  detail::add_common_options(model, o, false);
  CLI::App* sim = app.add_subcommand("sim", "run the slot-based simulator and write the empirical profile");
  detail::add_common_options(sim, o, true);
  CLI::App* comp = app.add_subcommand("compare", "run model and simulation, write both plus an error summary");
  detail::add_common_options(comp, o, true);
  CLI::App* sw = app.add_subcommand("sweep", "sweep one parameter, one CSV per point plus an index");
  detail::add_common_options(sw, o, true);
  sw->add_option("--param", o.sweep_param, "v|U|d|target");
  sw->add_option("--values", o.sweep_values, "comma-separated values");
  sw->add_flag("--sim", o.with_sim, "also simulate each point");
  CLI::App* preset = app.add_subcommand("preset", "run a pinned figure-reproduction preset");
  detail::add_common_options(preset, o, true);
  preset->add_option("name", o.preset_name, "fig3|fig4a|fig4b|fig5|fig6|fig7a|fig7b")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    detail::apply_config_file(defaults, o, sub);
    if (sub == model) return detail::run_model(o);
    if (sub == sim) return detail::run_sim(o);
    if (sub == comp) return detail::run_compare(o);
    if (sub == sw) return detail::run_sweep(o);
    return detail::run_preset(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace pullstream::cli
