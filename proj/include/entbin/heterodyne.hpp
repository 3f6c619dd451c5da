#pragma once

#include <complex>
#include <cstdint>

#include "entbin/channels.hpp"

namespace entbin::heterodyne {

/// Threshold receiver measuring Re[z] of Z = a + b^dagger.
struct ReceiverModel {
  double delta;      ///< heterodyne width, in (0, 1]
  double alpha;      ///< signal displacement, >= 0
  double threshold;  ///< decide the displaced signal when Re[z] > threshold

  /// Throws DomainError when an invariant is violated.
  void validate() const;
  /// Receiver at the optimal threshold alpha/2 for the given channel.
  static ReceiverModel for_channel(const ChannelParams& params);
};

struct MonteCarloConfig {
  std::uint64_t seed = 0;
  std::uint64_t n_samples = 1'000'000;
  std::uint64_t chunk_size = 1 << 16;
  unsigned threads = 0;  ///< 0 picks hardware concurrency; never affects the result

  void validate() const;
};

struct SimulationResult {
  double empirical_error_rate = 0.0;
  std::uint64_t errors_when_psi1 = 0;
  std::uint64_t errors_when_psi2 = 0;
  std::uint64_t n_samples = 0;
  double std_error = 0.0;  ///< sqrt(r (1 - r) / n) at the empirical rate r
  std::uint64_t seed = 0;

  bool operator==(const SimulationResult&) const = default;
};

struct ErrorComponents {
  double r12;  ///< decide psi1 when psi2 was sent
  double r21;  ///< decide psi2 when psi1 was sent
};

/// Heterodyne width for a twin beam carrying n_lambda photons.
double delta_lambda(double n_lambda);
/// Same quantity from sqrt((1 - lambda) / (1 + lambda)).
double delta_from_lambda(double lambda);

/// p(z|alpha) = exp(-|z - alpha|^2 / delta^2) / (pi delta^2).
double conditional_density(std::complex<double> z, double alpha, double delta);

ErrorComponents error_components(double alpha, double delta, double threshold);

/// (R12 + R21) / 2.
ErrorProbability re_at_threshold(double alpha, double delta, double threshold);

/// alpha / (2 delta): the argument of Erf in the receiver's error at the optimal threshold.
double erf_argument(const ChannelParams& params);

/// Error at the optimal threshold, 1/2 erfc(alpha / (2 delta)).
ErrorProbability re_heterodyne(const ChannelParams& params);
/// log(re_heterodyne), finite far into the tail.
double log_re_heterodyne(const ChannelParams& params);

/// N / (2 (1 + N)).
double beta_opt_het(double n);

/// Draws hypotheses and Re[z] outcomes and applies the alpha/2 threshold rule.
/// The result depends only on (params, config.seed, config.n_samples, config.chunk_size).
SimulationResult simulate(const ChannelParams& params, const MonteCarloConfig& config);

}  // namespace entbin::heterodyne
