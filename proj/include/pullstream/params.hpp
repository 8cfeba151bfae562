#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pullstream {

/// Dissemination scheme run by every peer.
enum class Scheme { chunk_first, peer_first, epidemic, push_pull };

/// Chunk selection strategy: which missing chunk a requester asks for.
enum class Strategy { latest_first, greedy, random };

/// How much buffer-map knowledge the chunk selection uses.
enum class SelectionMode { zero_neighbor, one_neighbor, v_neighbor };

/// Peer selection strategy: which neighbor receives the request.
enum class PeerSelection { random_peer, random_useful };

/// Whether a peer may serve one request per slot or up to U of them.
enum class ReplyMode { single, multi };

struct SystemParams {
  int overlay_size = 100;   // N: peers, excluding the source
  int buffer_size = 40;     // n: buffer positions; position n is played out
  int neighbor_count = 10;  // v
  int reply_number = 1;     // U: chunks a peer may upload per slot
  int split_point = 20;     // d: push/pull buffer split (push-pull only)

  void validate() const {
    if (overlay_size < 1) throw std::invalid_argument("overlay_size N must be >= 1");
    if (buffer_size < 2) throw std::invalid_argument("buffer_size n must be >= 2");
    if (neighbor_count < 1 || neighbor_count > overlay_size - 1)
      throw std::invalid_argument("neighbor_count v must satisfy 1 <= v <= N-1");
    if (reply_number < 1) throw std::invalid_argument("reply_number U must be >= 1");
    if (split_point < 1 || split_point > buffer_size)
      throw std::invalid_argument("split_point d must satisfy 1 <= d <= n");
  }
};

struct SchemeSpec {
  Scheme scheme = Scheme::peer_first;
  Strategy strategy = Strategy::latest_first;
  PeerSelection peer_selection = PeerSelection::random_useful;
  ReplyMode reply_mode = ReplyMode::single;

  // The epidemic scheme exchanges no buffer maps: peers are picked blindly
  // and a single reply is all the scheme is defined for.
  static SchemeSpec make(Scheme sc, Strategy st, PeerSelection ps, ReplyMode rm) {
    SchemeSpec s{sc, st, ps, rm};
    if (sc == Scheme::epidemic) {
      s.peer_selection = PeerSelection::random_peer;
      s.reply_mode = ReplyMode::single;
    }
    return s;
  }

  void validate() const {
    if (scheme == Scheme::epidemic) {
      if (peer_selection != PeerSelection::random_peer)
        throw std::invalid_argument("epidemic scheme requires random peer selection");
      if (reply_mode != ReplyMode::single)
        throw std::invalid_argument("epidemic scheme requires single reply mode");
    }
  }
};

// ---- spellings used by the CLI and config files ----

inline Scheme parse_scheme(std::string_view s) {
  if (s == "cf") return Scheme::chunk_first;
  if (s == "pf") return Scheme::peer_first;
  if (s == "ep") return Scheme::epidemic;
  if (s == "pushpull") return Scheme::push_pull;
  throw std::invalid_argument("unknown scheme '" + std::string(s) + "' (expected cf|pf|ep|pushpull)");
}

inline Strategy parse_strategy(std::string_view s) {
  if (s == "latest") return Strategy::latest_first;
  if (s == "greedy") return Strategy::greedy;
  if (s == "random") return Strategy::random;
  throw std::invalid_argument("unknown strategy '" + std::string(s) + "' (expected latest|greedy|random)");
}

inline PeerSelection parse_peer_selection(std::string_view s) {
  if (s == "random") return PeerSelection::random_peer;
  if (s == "useful") return PeerSelection::random_useful;
  throw std::invalid_argument("unknown peer selection '" + std::string(s) + "' (expected random|useful)");
}

inline ReplyMode parse_reply_mode(std::string_view s) {
  if (s == "single") return ReplyMode::single;
  if (s == "multi") return ReplyMode::multi;
  throw std::invalid_argument("unknown reply mode '" + std::string(s) + "' (expected single|multi)");
}

inline std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::chunk_first: return "cf";
    case Scheme::peer_first: return "pf";
    case Scheme::epidemic: return "ep";
    case Scheme::push_pull: return "pushpull";
  }
  return "?";
}

inline std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::latest_first: return "latest";
    case Strategy::greedy: return "greedy";
    case Strategy::random: return "random";
  }
  return "?";
}

inline std::string_view to_string(PeerSelection s) {
  return s == PeerSelection::random_peer ? "random" : "useful";
}

inline std::string_view to_string(ReplyMode s) {
  return s == ReplyMode::single ? "single" : "multi";
}

}  // namespace pullstream
