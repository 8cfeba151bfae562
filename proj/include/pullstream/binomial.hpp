#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace pullstream {

inline void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument(std::string("invalid probability for ") + what);
}

/// C(n, k) by the multiplicative recurrence. Exact in double for the
/// neighbor-set sizes this model works with (v <= 64 or so).
inline double binomial_coefficient(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double c = 1.0;
  for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
  return c;
}

/// Distribution of the number of successes over independent, unequal trials.
/// O(m^2) convolution; pmf[j] = P(X = j).
inline std::vector<double> poisson_binomial_pmf(std::span<const double> probs) {
  for (double p : probs) require_probability(p, "poisson_binomial_pmf");
  std::vector<double> pmf{1.0};
  pmf.reserve(probs.size() + 1);
  for (double q : probs) {
    pmf.push_back(0.0);
    for (std::size_t j = pmf.size() - 1; j > 0; --j)
      pmf[j] = pmf[j] * (1.0 - q) + pmf[j - 1] * q;
    pmf[0] *= 1.0 - q;
  }
  return pmf;
}

/// E[1/(X+1)] where X counts successes over the given independent trials.
/// Empty input means X = 0 surely, so the result is 1.
inline double expected_inverse_count(std::span<const double> probs) {
  std::vector<double> pmf = poisson_binomial_pmf(probs);
  double e = 0.0;
  for (std::size_t j = 0; j < pmf.size(); ++j) e += pmf[j] / static_cast<double>(j + 1);
  return e;
}

}  // namespace pullstream
