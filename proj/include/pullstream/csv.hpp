#pragma once

#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pullstream/profile.hpp"

namespace pullstream {

// All CSVs use 6 decimal places, LF line endings, UTF-8.

inline std::string format_fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

inline std::string profile_csv(const DiffusionProfile& profile) {
  std::string out = "position,probability\n";
  for (int i = 1; i <= profile.positions(); ++i) {
    out += std::to_string(i);
    out += ',';
    out += format_fixed(profile.at(i));
    out += '\n';
  }
  return out;
}

/// Empirical CSV carries the across-seed spread next to the mean.
inline std::string empirical_csv(const std::vector<double>& mean,
                                 const std::vector<double>& stddev,
                                 long long samples) {
  std::string out = "position,probability,stddev,samples\n";
  for (std::size_t i = 0; i < mean.size(); ++i) {
    out += std::to_string(i + 1);
    out += ',';
    out += format_fixed(mean[i]);
    out += ',';
    out += format_fixed(stddev[i]);
    out += ',';
    out += std::to_string(samples);
    out += '\n';
  }
  return out;
}

inline std::string error_summary_csv(double mae, double max_abs_error) {
  std::string out = "metric,value\n";
  out += "mae," + format_fixed(mae) + "\n";
  out += "max_abs_error," + format_fixed(max_abs_error) + "\n";
  return out;
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
  if (!f) throw std::runtime_error("write failed: " + path);
}

/// Reads back a profile CSV written by profile_csv (or the first two
/// columns of an empirical CSV).
inline std::vector<double> read_profile_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open for reading: " + path);
  std::string line;
  if (!std::getline(f, line)) throw std::runtime_error("empty CSV: " + path);
  std::vector<double> values;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    if (c1 == std::string::npos) throw std::runtime_error("malformed CSV row: " + line);
    auto c2 = line.find(',', c1 + 1);
    if (c2 == std::string::npos) c2 = line.size();
    values.push_back(std::stod(line.substr(c1 + 1, c2 - c1 - 1)));
  }
  return values;
}

/// Flat `key = value` config file; `#` starts a comment. Keys match the
/// CLI override flag names.
inline std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open config file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\r");
    const auto b = s.find_last_not_of(" \t\r");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };
  while (std::getline(f, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": empty key or value");
    kv[key] = value;
  }
  return kv;
}

}  // namespace pullstream
