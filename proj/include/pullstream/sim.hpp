#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pullstream/params.hpp"
#include "pullstream/rng.hpp"
#include "pullstream/topology.hpp"

namespace pullstream {

struct SimConfig {
  SystemParams params;
  SchemeSpec spec;
  int slots = 2500;
  int warmup = 500;
  std::uint64_t seed = 0;
  bool verify_invariants = false;  // track per-slot caps and serve sources

  void validate() const {
    // The simulator additionally admits v = 0 (isolated peers); everything
    // else follows the model's parameter bounds.
    if (params.overlay_size < 1) throw std::invalid_argument("overlay_size N must be >= 1");
    if (params.buffer_size < 2) throw std::invalid_argument("buffer_size n must be >= 2");
    if (params.neighbor_count < 0 || params.neighbor_count > params.overlay_size - 1)
      throw std::invalid_argument("neighbor_count v must satisfy 0 <= v <= N-1");
    if (params.reply_number < 1) throw std::invalid_argument("reply_number U must be >= 1");
    if (params.split_point < 1 || params.split_point > params.buffer_size)
      throw std::invalid_argument("split_point d must satisfy 1 <= d <= n");
    if (slots < 1) throw std::invalid_argument("slots must be >= 1");
    if (warmup < 0 || warmup >= slots) throw std::invalid_argument("warmup must satisfy 0 <= warmup < slots");
    spec.validate();
  }
};

/// Buffer-position occupancy frequencies averaged over peers and measured
/// slots; values[i-1] estimates P_i.
struct EmpiricalProfile {
  std::vector<double> values;
  long long sample_count = 0;  // (peer, slot) samples per position
};

struct Request {
  int requester = -1;
  int target = -1;
  int position = 0;  // buffer position of the wanted chunk at issue time
};

struct SimResult {
  EmpiricalProfile profile;
  long long total_requests = 0;
  long long total_deliveries = 0;
  // populated when verify_invariants is set:
  bool invariants_ok = true;
  int max_uploads_per_slot = 0;   // over all peers and slots
  int max_requests_per_slot = 0;  // per peer
};

namespace detail {

// Ownership bitmap over buffer positions 1..n for one peer.
class Buffer {
 public:
  explicit Buffer(int n) : bits_(static_cast<std::size_t>(n) + 1, 0) {}
  bool has(int pos) const { return bits_[static_cast<std::size_t>(pos)] != 0; }
  void set(int pos) { bits_[static_cast<std::size_t>(pos)] = 1; }
  void age() {  // every chunk moves one position toward playout
    for (std::size_t p = bits_.size() - 1; p >= 2; --p) bits_[p] = bits_[p - 1];
    bits_[1] = 0;
  }

 private:
  std::vector<std::uint8_t> bits_;
};

inline int pick_position(const std::vector<int>& candidates, Strategy strategy,
                         std::mt19937_64& rng) {
  // candidates are in ascending position order (newest first)
  switch (strategy) {
    case Strategy::latest_first: return candidates.front();
    case Strategy::greedy: return candidates.back();
    case Strategy::random: return candidates[static_cast<std::size_t>(
        uniform_index(rng, static_cast<int>(candidates.size())))];
  }
  return candidates.front();
}

}  // namespace detail

/// Slot-synchronous run of the configured scheme on a seeded random mesh.
///
/// Each slot: the source hands the newest chunk to one random peer; every
/// peer, in ascending id order, issues at most one request against its
/// neighbors' buffers as committed at the slot boundary; each peer serves
/// up to U of the requests it can satisfy; deliveries become visible in the
/// next slot. Occupancy is sampled after the source grant and before any
/// delivery, so position 1 measures exactly the source's 1/N share.
inline SimResult run_simulation(const SimConfig& config) {
  config.validate();
  const int N = config.params.overlay_size;
  const int n = config.params.buffer_size;
  const int v = config.params.neighbor_count;
  const int U = config.params.reply_number;
  const int d = config.params.split_point;
  const Scheme scheme = config.spec.scheme;
  const Strategy strategy = config.spec.strategy;
  const PeerSelection selection = config.spec.peer_selection;
  const int reply_cap = config.spec.reply_mode == ReplyMode::single ? 1 : U;

  const Topology topo = build_topology(N, v, config.seed);
  std::mt19937_64 rng(config.seed ^ 0x9E3779B97F4A7C15ull);

  std::vector<detail::Buffer> own(static_cast<std::size_t>(N), detail::Buffer(n));
  std::vector<long long> occupancy(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Request> requests;
  std::vector<std::vector<Request>> incoming(static_cast<std::size_t>(N));
  std::vector<std::pair<int, int>> deliveries;  // (receiver, position)
  std::vector<int> scratch;

  SimResult result;
  const int last_pull_pos = n - 1;  // the playout position is never requested

  for (int t = 1; t <= config.slots; ++t) {
    for (auto& b : own) b.age();
    own[static_cast<std::size_t>(uniform_index(rng, N))].set(1);

    if (t > config.warmup) {
      for (int p = 0; p < N; ++p)
        for (int pos = 1; pos <= n; ++pos)
          if (own[static_cast<std::size_t>(p)].has(pos)) ++occupancy[static_cast<std::size_t>(pos)];
    }

    requests.clear();
    for (int p = 0; p < N; ++p) {
      const auto& nb = topo.neighbors[static_cast<std::size_t>(p)];
      if (nb.empty()) continue;
      const auto& mine = own[static_cast<std::size_t>(p)];
      scratch.clear();

      if (scheme == Scheme::chunk_first) {
        for (int pos = 1; pos <= last_pull_pos; ++pos) {
          if (mine.has(pos)) continue;
          for (int q : nb)
            if (own[static_cast<std::size_t>(q)].has(pos)) { scratch.push_back(pos); break; }
        }
        if (scratch.empty()) continue;
        const int pos = detail::pick_position(scratch, strategy, rng);
        int target;
        if (selection == PeerSelection::random_useful) {
          scratch.clear();
          for (int q : nb)
            if (own[static_cast<std::size_t>(q)].has(pos)) scratch.push_back(q);
          target = scratch[static_cast<std::size_t>(uniform_index(rng, static_cast<int>(scratch.size())))];
        } else {
          target = nb[static_cast<std::size_t>(uniform_index(rng, static_cast<int>(nb.size())))];
        }
        requests.push_back({p, target, pos});
      } else if (scheme == Scheme::peer_first) {
        int target = -1;
        if (selection == PeerSelection::random_useful) {
          for (int q : nb) {
            for (int pos = 1; pos <= last_pull_pos; ++pos)
              if (!mine.has(pos) && own[static_cast<std::size_t>(q)].has(pos)) { scratch.push_back(q); break; }
          }
          if (scratch.empty()) continue;
          target = scratch[static_cast<std::size_t>(uniform_index(rng, static_cast<int>(scratch.size())))];
        } else {
          target = nb[static_cast<std::size_t>(uniform_index(rng, static_cast<int>(nb.size())))];
        }
        scratch.clear();
        for (int pos = 1; pos <= last_pull_pos; ++pos)
          if (!mine.has(pos) && own[static_cast<std::size_t>(target)].has(pos)) scratch.push_back(pos);
        if (scratch.empty()) continue;  // blindly chosen peer had nothing useful
        requests.push_back({p, target, detail::pick_position(scratch, strategy, rng)});
      } else if (scheme == Scheme::epidemic) {
        for (int pos = 1; pos <= last_pull_pos; ++pos)
          if (!mine.has(pos)) scratch.push_back(pos);
        if (scratch.empty()) continue;
        const int pos = detail::pick_position(scratch, strategy, rng);
        const int target = nb[static_cast<std::size_t>(uniform_index(rng, static_cast<int>(nb.size())))];
        requests.push_back({p, target, pos});  // may miss: blind choice
      } else {  // push_pull: greedy blind pull over positions d+1..n
        for (int pos = n; pos >= d + 1; --pos)
          if (!mine.has(pos)) { scratch.push_back(pos); break; }
        if (scratch.empty()) continue;
        const int target = nb[static_cast<std::size_t>(uniform_index(rng, static_cast<int>(nb.size())))];
        requests.push_back({p, target, scratch.front()});
      }
    }
    result.total_requests += static_cast<long long>(requests.size());
    if (config.verify_invariants) {
      std::vector<int> per_peer(static_cast<std::size_t>(N), 0);
      for (const Request& r : requests) {
        ++per_peer[static_cast<std::size_t>(r.requester)];
        if (!topo.adjacent(r.requester, r.target) ||
            own[static_cast<std::size_t>(r.requester)].has(r.position))
          result.invariants_ok = false;
      }
      for (int c : per_peer) result.max_requests_per_slot = std::max(result.max_requests_per_slot, c);
    }

    for (auto& inc : incoming) inc.clear();
    for (const Request& r : requests) incoming[static_cast<std::size_t>(r.target)].push_back(r);

    deliveries.clear();
    for (int p = 0; p < N; ++p) {
      auto& reqs = incoming[static_cast<std::size_t>(p)];
      const auto& mine = own[static_cast<std::size_t>(p)];
      // keep only requests this peer can actually serve
      std::size_t keep = 0;
      for (const Request& r : reqs)
        if (mine.has(r.position)) reqs[keep++] = r;
      reqs.resize(keep);

      int served = 0;
      if (!reqs.empty()) {
        shuffle_in_place(reqs, rng);
        if (scheme == Scheme::push_pull)  // chunks nearest playout first, random among equals
          std::stable_sort(reqs.begin(), reqs.end(),
                           [](const Request& a, const Request& b) { return a.position > b.position; });
        for (const Request& r : reqs) {
          if (served >= reply_cap) break;
          deliveries.emplace_back(r.requester, r.position);
          ++served;
        }
      }
      if (scheme == Scheme::push_pull && served == 0) {
        // idle peers push their newest chunk in [1, d] to a random neighbor
        const auto& nb = topo.neighbors[static_cast<std::size_t>(p)];
        if (!nb.empty()) {
          for (int pos = 1; pos <= d; ++pos) {
            if (mine.has(pos)) {
              const int target = nb[static_cast<std::size_t>(uniform_index(rng, static_cast<int>(nb.size())))];
              if (!own[static_cast<std::size_t>(target)].has(pos)) {
                deliveries.emplace_back(target, pos);
                ++served;
              }
              break;
            }
          }
        }
      }
      if (config.verify_invariants)
        result.max_uploads_per_slot = std::max(result.max_uploads_per_slot, served);
    }

    // commit at slot end; chunks landing past the playout position are gone
    for (const auto& [receiver, pos] : deliveries) {
      if (pos <= n) own[static_cast<std::size_t>(receiver)].set(pos);
      ++result.total_deliveries;
    }
  }

  const long long measured = config.slots - config.warmup;
  result.profile.sample_count = static_cast<long long>(N) * measured;
  result.profile.values.reserve(static_cast<std::size_t>(n));
  for (int pos = 1; pos <= n; ++pos)
    result.profile.values.push_back(static_cast<double>(occupancy[static_cast<std::size_t>(pos)]) /
                                    static_cast<double>(result.profile.sample_count));
  if (config.verify_invariants && result.max_uploads_per_slot > reply_cap)
    result.invariants_ok = false;
  return result;
}

}  // namespace pullstream
