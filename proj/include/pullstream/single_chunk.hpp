#pragma once

#include <cmath>
#include <stdexcept>

#include "pullstream/params.hpp"
#include "pullstream/profile.hpp"

namespace pullstream {

/// Diffusion of a single chunk over T slots (chunk selection trivially
/// picks it; only the peer selection matters). Index is a time slot here.
inline DiffusionProfile single_chunk_profile(PeerSelection kind, int N, int v, int T) {
  if (N < 1 || v < 1 || T < 1) throw std::invalid_argument("single_chunk_profile: bad arguments");
  DiffusionProfile prof;
  prof.values.reserve(static_cast<std::size_t>(T));
  double p = 1.0 / N;
  prof.values.push_back(p);
  const double blind_hit = 1.0 - std::pow(1.0 - 1.0 / v, v);
  for (int t = 1; t < T; ++t) {
    const double z = kind == PeerSelection::random_useful
                         ? 1.0 - std::pow(p, v)
                         : (1.0 - p) * blind_hit;
    p = p + std::min(p * z, 1.0 - p);
    prof.values.push_back(p);
  }
  return prof;
}

namespace detail {

inline double log_sigmoid(double s) {
  // log(1/(1+e^-s)) without overflow on either tail
  return s >= 0.0 ? -std::log1p(std::exp(-s)) : s - std::log1p(std::exp(s));
}

}  // namespace detail

/// Continuous-limit curve for the single-chunk, random-useful recursion:
/// the exact solution of y' = y(1 - y^v) through y(1) = P_1, namely
/// y(x)^v = sigmoid(vx + C). Matches the discrete recursion's shape; see
/// single_chunk_logistic_approx for the cruder logistic curve.
inline double single_chunk_closed_form_useful(double x, double p1, int v) {
  if (!(p1 > 0.0 && p1 < 1.0)) throw std::domain_error("single_chunk_closed_form_useful: P_1 must be in (0,1)");
  if (v < 1) throw std::invalid_argument("single_chunk_closed_form_useful: v must be >= 1");
  const double p1v = std::pow(p1, v);
  const double c = v * std::log(p1) - std::log1p(-p1v) - v;
  return std::exp(detail::log_sigmoid(v * x + c) / v);
}

/// Plain logistic curve through y(1) = P_1 with rate v. This is what a
/// first-order large-y linearization of the recursion gives; it rises far
/// too early at small y and is kept only for comparison in tests.
inline double single_chunk_logistic_approx(double x, double p1, int v) {
  if (!(p1 > 0.0 && p1 < 1.0)) throw std::domain_error("single_chunk_logistic_approx: P_1 must be in (0,1)");
  const double c = std::log(1.0 / (1.0 - p1) - 1.0) - v;
  return 1.0 - 1.0 / (std::exp(v * x + c) + 1.0);
}

/// Inverse mapping x(y) for the single-chunk, random-peer recursion in its
/// continuous limit y' = (1 - 1/e) y (1 - y): a logistic in disguise, so
/// x(y) = C + [ln y - ln(1-y)] / (1 - 1/e) with x(P_1) = 1. The difference
/// of logarithms is the form that tracks the discrete recursion; the sum
/// variant is not even monotone past y = 1/2 (see the validation test).
inline double single_chunk_closed_form_random_x(double y, double p1) {
  if (!(y > 0.0 && y < 1.0)) throw std::domain_error("single_chunk_closed_form_random_x: y must be in (0,1)");
  if (!(p1 > 0.0 && p1 < 1.0)) throw std::domain_error("single_chunk_closed_form_random_x: P_1 must be in (0,1)");
  const double a = 1.0 - std::exp(-1.0);
  const auto logit = [](double t) { return std::log(t) - std::log1p(-t); };
  return 1.0 + (logit(y) - logit(p1)) / a;
}

}  // namespace pullstream
