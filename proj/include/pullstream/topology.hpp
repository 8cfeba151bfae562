#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pullstream/rng.hpp"

namespace pullstream {

/// Undirected random mesh. Most peers end up with exactly v neighbors;
/// a few may stay below when the pairing budget runs out.
struct Topology {
  std::vector<std::vector<int>> neighbors;

  int size() const { return static_cast<int>(neighbors.size()); }
  int degree(int peer) const { return static_cast<int>(neighbors[static_cast<std::size_t>(peer)].size()); }
  bool adjacent(int a, int b) const {
    const auto& nb = neighbors[static_cast<std::size_t>(a)];
    return std::find(nb.begin(), nb.end(), b) != nb.end();
  }
  double mean_degree() const {
    double s = 0.0;
    for (const auto& nb : neighbors) s += static_cast<double>(nb.size());
    return neighbors.empty() ? 0.0 : s / static_cast<double>(neighbors.size());
  }
};

/// Random pairing of degree-deficient peers until everyone reaches degree v
/// or the retry budget is spent. Deterministic for a fixed seed. v = 0 yields
/// the empty topology (isolated peers).
inline Topology build_topology(int peers, int v, std::uint64_t seed) {
  if (peers < 1) throw std::invalid_argument("build_topology: need at least one peer");
  if (v >= peers) throw std::invalid_argument("build_topology: v must be <= N-1");
  Topology topo;
  topo.neighbors.assign(static_cast<std::size_t>(peers), {});
  if (v <= 0 || peers < 2) return topo;

  std::mt19937_64 rng(seed);
  std::vector<int> deficient;
  long long budget = 50LL * peers * v;
  while (budget-- > 0) {
    deficient.clear();
    for (int p = 0; p < peers; ++p)
      if (topo.degree(p) < v) deficient.push_back(p);
    if (deficient.size() < 2) break;
    const int a = deficient[uniform_index(rng, static_cast<int>(deficient.size()))];
    const int b = deficient[uniform_index(rng, static_cast<int>(deficient.size()))];
    if (a == b || topo.adjacent(a, b)) continue;
    topo.neighbors[static_cast<std::size_t>(a)].push_back(b);
    topo.neighbors[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& nb : topo.neighbors) std::sort(nb.begin(), nb.end());
  return topo;
}

}  // namespace pullstream
