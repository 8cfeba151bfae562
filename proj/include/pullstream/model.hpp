#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pullstream/binomial.hpp"
#include "pullstream/params.hpp"
#include "pullstream/profile.hpp"

namespace pullstream {

/// Probability that a chunk with presence probability p can be pulled:
/// the local peer lacks it while at least one of v neighbors has it.
inline double availability(double p, int v) {
  require_probability(p, "availability");
  if (v < 1) throw std::invalid_argument("availability: v must be >= 1");
  return (1.0 - p) * (1.0 - std::pow(1.0 - p, v));
}

namespace detail {

// Survival factor of position k in the latest/greedy priority products:
// probability position k does NOT preempt the candidate.
inline double priority_factor(SelectionMode mode, double pk, int v) {
  switch (mode) {
    case SelectionMode::zero_neighbor: return pk;
    case SelectionMode::one_neighbor: return 1.0 - availability(pk, 1);
    case SelectionMode::v_neighbor: return 1.0 - availability(pk, v);
  }
  return 0.0;
}

// Probability position k competes as a candidate under the random strategy.
inline double selectable_prob(SelectionMode mode, double pk, int v) {
  switch (mode) {
    case SelectionMode::zero_neighbor: return 1.0 - pk;
    case SelectionMode::one_neighbor: return availability(pk, 1);
    case SelectionMode::v_neighbor: return availability(pk, v);
  }
  return 0.0;
}

}  // namespace detail

/// Chunk-selection weight c_{mode,i}: probability the strategy's priority
/// rule lands on position i. Candidate positions are [1, n-1]; the playout
/// position is never requested.
inline double chunk_weight(SelectionMode mode, Strategy strategy,
                           const DiffusionProfile& profile, int i, int v) {
  const int n = profile.positions();
  if (i < 1 || i > n - 1) throw std::out_of_range("chunk_weight: position out of range");
  switch (strategy) {
    case Strategy::latest_first: {
      double c = 1.0;
      for (int k = 1; k < i; ++k) c *= detail::priority_factor(mode, profile.at(k), v);
      return c;
    }
    case Strategy::greedy: {
      double c = 1.0;
      for (int k = i + 1; k <= n - 1; ++k) c *= detail::priority_factor(mode, profile.at(k), v);
      return c;
    }
    case Strategy::random: {
      std::vector<double> sel;
      sel.reserve(static_cast<std::size_t>(n) - 2);
      for (int k = 1; k <= n - 1; ++k)
        if (k != i) sel.push_back(detail::selectable_prob(mode, profile.at(k), v));
      return expected_inverse_count(sel);
    }
  }
  return 0.0;
}

/// Chunk-first peer pick probability: chance a given possessor of the
/// target chunk is the one asked.
inline double peer_prob_cf(PeerSelection kind, double p_i, int v) {
  require_probability(p_i, "peer_prob_cf");
  if (kind == PeerSelection::random_peer) return 1.0 / v;
  double p = 0.0;
  for (int k = 0; k < v; ++k)
    p += binomial_coefficient(v - 1, k) / (k + 1) *
         std::pow(p_i, k) * std::pow(1.0 - p_i, v - 1 - k);
  return p;
}

struct PfPeerProb {
  double useful = 0.0;  // u: probability a given neighbor has anything to offer
  double pick = 0.0;    // p: probability a given neighbor is the one asked
};

/// Peer-first neighbor pick probability (profile-wide, not per position).
inline PfPeerProb peer_prob_pf(PeerSelection kind, const DiffusionProfile& profile, int v) {
  if (kind == PeerSelection::random_peer) return {0.0, 1.0 / v};
  double miss = 1.0;
  for (int k = 1; k <= profile.positions(); ++k) miss *= 1.0 - availability(profile.at(k), 1);
  const double u = 1.0 - miss;
  double p = 0.0;
  for (int k = 0; k < v; ++k)
    p += binomial_coefficient(v - 1, k) / (k + 1) *
         std::pow(u, k) * std::pow(1.0 - u, v - 1 - k);
  return {u, p};
}

/// Optional large-v / unbounded-reply simplifications. Exact binomial
/// forms stay the default everywhere.
struct ModelOptions {
  bool cf_large_v_approx = false;        // Z = 1 - exp(-c(1-P)) in chunk-first
  bool pf_large_v_approx = false;        // Z = c(1-P)(1-1/e) in peer-first single reply
  bool pf_unbounded_reply_approx = false;  // Z = c(1-P) in peer-first multi reply
  bool ep_large_v_approx = false;        // 1-(1-1/v)^v replaced by 1-1/e in epidemic
};

/// Success probability per holder of the chunk at position i under the
/// chunk-first scheme, with diagnostics.
inline PullRates z_chunk_first(const DiffusionProfile& profile, int i,
                               const SystemParams& params, const SchemeSpec& spec,
                               const ModelOptions& opts = {}) {
  const int v = params.neighbor_count;
  PullRates z;
  z.chunk_weight = chunk_weight(SelectionMode::v_neighbor, spec.strategy, profile, i, v);
  z.peer_prob = peer_prob_cf(spec.peer_selection, profile.at(i), v);
  z.request_prob = z.peer_prob * z.chunk_weight * (1.0 - profile.at(i));
  if (opts.cf_large_v_approx) {
    z.success = 1.0 - std::exp(-z.chunk_weight * (1.0 - profile.at(i)));
    return z;
  }
  if (spec.reply_mode == ReplyMode::single) {
    z.success = 1.0 - std::pow(1.0 - z.request_prob, v);
  } else {
    double s = 0.0;
    for (int k = 1; k <= v; ++k)
      s += std::min(k, params.reply_number) * binomial_coefficient(v, k) *
           std::pow(z.request_prob, k) * std::pow(1.0 - z.request_prob, v - k);
    z.success = s;
  }
  return z;
}

/// Success probability per holder under the peer-first scheme.
inline PullRates z_peer_first(const DiffusionProfile& profile, int i,
                              const SystemParams& params, const SchemeSpec& spec,
                              const ModelOptions& opts = {}) {
  const int v = params.neighbor_count;
  PullRates z;
  z.chunk_weight = chunk_weight(SelectionMode::one_neighbor, spec.strategy, profile, i, v);
  z.choose_prob = z.chunk_weight * (1.0 - profile.at(i));
  const PfPeerProb pp = peer_prob_pf(spec.peer_selection, profile, v);
  z.useful_prob = pp.useful;
  z.peer_prob = pp.pick;
  if (opts.pf_unbounded_reply_approx) {
    z.success = z.choose_prob;
    return z;
  }
  if (opts.pf_large_v_approx) {
    z.success = z.choose_prob * (1.0 - std::exp(-1.0));
    return z;
  }
  if (spec.reply_mode == ReplyMode::single) {
    z.success = z.choose_prob * (1.0 - std::pow(1.0 - z.peer_prob, v));
  } else {
    const double w = z.choose_prob;
    double s = 0.0;
    for (int k = 1; k <= v; ++k) {
      const int sk = std::min(k, params.reply_number);
      double qk = 0.0;  // expected replies when k requests arrived
      for (int t = 1; t <= sk; ++t)
        qk += t * binomial_coefficient(sk, t) * std::pow(w, t) * std::pow(1.0 - w, sk - t);
      s += qk * binomial_coefficient(v, k) *
           std::pow(z.peer_prob, k) * std::pow(1.0 - z.peer_prob, v - k);
    }
    z.success = s;
  }
  return z;
}

/// Success probability per holder under the blind epidemic scheme.
inline PullRates z_epidemic(const DiffusionProfile& profile, int i,
                            const SystemParams& params, Strategy strategy,
                            const ModelOptions& opts = {}) {
  const int v = params.neighbor_count;
  PullRates z;
  z.chunk_weight = chunk_weight(SelectionMode::zero_neighbor, strategy, profile, i, v);
  z.peer_prob = 1.0 / v;
  const double hit = opts.ep_large_v_approx
                         ? 1.0 - std::exp(-1.0)
                         : 1.0 - std::pow(1.0 - 1.0 / v, v);
  z.success = z.chunk_weight * (1.0 - profile.at(i)) * hit;
  return z;
}

struct ModelResult {
  DiffusionProfile profile;
  std::vector<PullRates> rates;  // positions 1..n-1, evaluated at the solution
  int iterations = 0;
  double residual = 0.0;
  bool converged = false;
};

namespace detail {

inline PullRates z_for(const DiffusionProfile& env, int i, const SystemParams& params,
                       const SchemeSpec& spec, const ModelOptions& opts) {
  switch (spec.scheme) {
    case Scheme::chunk_first: return z_chunk_first(env, i, params, spec, opts);
    case Scheme::peer_first: return z_peer_first(env, i, params, spec, opts);
    case Scheme::epidemic: return z_epidemic(env, i, params, spec.strategy, opts);
    case Scheme::push_pull: break;
  }
  throw std::invalid_argument("iterate_profile: scheme has no pull recursion");
}

}  // namespace detail

/// Solves the diffusion recursion P_{i+1} = P_i + min(P_i Z_i, 1 - P_i),
/// P_1 = 1/N. The latest-first strategy only looks backward, but greedy and
/// random weigh positions ahead of i, so the profile is found by iterating
/// the slot-advance map (every position's successor computed against the
/// previous iterate) until it stops moving. That map is exactly how the
/// buffer distribution of the slotted system evolves in time, so the
/// iteration settles on the attractor the simulation also reaches.
inline ModelResult iterate_profile(const SystemParams& params, const SchemeSpec& spec,
                                   const ModelOptions& opts = {},
                                   double tol = 1e-12, int max_iterations = 100000) {
  params.validate();
  spec.validate();
  const int n = params.buffer_size;
  const double p1 = 1.0 / params.overlay_size;

  ModelResult result;
  DiffusionProfile env;
  env.values.assign(static_cast<std::size_t>(n), p1);
  DiffusionProfile next = env;

  for (int it = 1; it <= max_iterations; ++it) {
    next.at(1) = p1;
    for (int i = 1; i <= n - 1; ++i) {
      const double zi = detail::z_for(env, i, params, spec, opts).success;
      next.at(i + 1) = env.at(i) + std::min(env.at(i) * zi, 1.0 - env.at(i));
    }
    double delta = 0.0;
    for (int i = 1; i <= n; ++i) delta = std::max(delta, std::abs(next.at(i) - env.at(i)));
    env = next;
    result.iterations = it;
    result.residual = delta;
    if (delta < tol) {
      result.converged = true;
      break;
    }
  }

  result.profile = env;
  result.rates.reserve(static_cast<std::size_t>(n) - 1);
  for (int i = 1; i <= n - 1; ++i)
    result.rates.push_back(detail::z_for(env, i, params, spec, opts));
  return result;
}

}  // namespace pullstream
