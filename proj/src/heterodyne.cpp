#include "entbin/heterodyne.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "entbin/errors.hpp"
#include "entbin/special_functions.hpp"

namespace entbin::heterodyne {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Counter-based stream: the k-th output depends only on (key, k).
class CounterStream {
 public:
  explicit CounterStream(std::uint64_t key) : key_(key) {}

  std::uint64_t bits(std::uint64_t counter) const { return mix64(key_ + (counter + 1) * kGolden); }

  /// Uniform on (0, 1].
  double uniform(std::uint64_t counter) const {
    return static_cast<double>((bits(counter) >> 11) + 1) * 0x1.0p-53;
  }

 private:
  std::uint64_t key_;
};

std::uint64_t chunk_key(std::uint64_t seed, std::uint64_t chunk) {
  return mix64(seed ^ mix64(chunk + 0x632BE59BD9B4E019ULL));
}

struct ChunkTally {
  std::uint64_t psi1 = 0;
  std::uint64_t psi2 = 0;
};

ChunkTally run_chunk(std::uint64_t key, std::uint64_t count, double alpha, double sigma,
                     double threshold) {
  const CounterStream stream(key);
  ChunkTally tally;
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t base = 3 * i;
    const bool displaced = (stream.bits(base) >> 63) != 0;
    const double u1 = stream.uniform(base + 1);
    const double u2 = stream.uniform(base + 2);
    const double gauss = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    const double re_z = (displaced ? alpha : 0.0) + sigma * gauss;
    const bool decide_displaced = re_z > threshold;
    if (displaced && !decide_displaced) ++tally.psi2;
    if (!displaced && decide_displaced) ++tally.psi1;
  }
  return tally;
}

}  // namespace

void ReceiverModel::validate() const {
  if (!(delta > 0.0 && delta <= 1.0)) throw DomainError("ReceiverModel: delta must lie in (0, 1]");
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw DomainError("ReceiverModel: alpha must be finite and >= 0");
  }
  if (!std::isfinite(threshold)) throw DomainError("ReceiverModel: threshold must be finite");
}

ReceiverModel ReceiverModel::for_channel(const ChannelParams& params) {
  const double alpha = params.alpha();
  return ReceiverModel{delta_lambda(params.twb_photons()), alpha, 0.5 * alpha};
}

void MonteCarloConfig::validate() const {
  if (n_samples < 1) throw DomainError("MonteCarloConfig: n_samples must be >= 1");
  if (chunk_size < 1) throw DomainError("MonteCarloConfig: chunk_size must be >= 1");
}

double delta_lambda(double n_lambda) {
  if (!(n_lambda >= 0.0)) throw DomainError("delta_lambda: photon number must be >= 0");
  if (std::isinf(n_lambda)) return 0.0;
  // delta^2 = (sqrt(t+2) - sqrt(t)) / (sqrt(t+2) + sqrt(t)) = (sqrt(t+2) - sqrt(t))^2 / 2
  return std::numbers::sqrt2 / (std::sqrt(n_lambda + 2.0) + std::sqrt(n_lambda));
}

double delta_from_lambda(double lambda) {
  if (!(lambda >= 0.0 && lambda < 1.0)) throw DomainError("delta_from_lambda: lambda must lie in [0, 1)");
  return std::sqrt((1.0 - lambda) / (1.0 + lambda));
}

double conditional_density(std::complex<double> z, double alpha, double delta) {
  if (!(delta > 0.0)) throw DomainError("conditional_density: delta must be > 0");
  const double d2 = delta * delta;
  return std::exp(-std::norm(z - alpha) / d2) / (std::numbers::pi * d2);
}

ErrorComponents error_components(double alpha, double delta, double threshold) {
  if (!(delta > 0.0)) throw DomainError("error_components: delta must be > 0");
  return {0.5 * special::erfc((alpha - threshold) / delta), 0.5 * special::erfc(threshold / delta)};
}

ErrorProbability re_at_threshold(double alpha, double delta, double threshold) {
  const auto [r12, r21] = error_components(alpha, delta, threshold);
  return ErrorProbability(std::min(0.5, 0.5 * (r12 + r21)));
}

double erf_argument(const ChannelParams& params) {
  return 0.5 * params.alpha() / delta_lambda(params.twb_photons());
}

ErrorProbability re_heterodyne(const ChannelParams& params) {
  return ErrorProbability(0.5 * special::erfc(erf_argument(params)));
}

double log_re_heterodyne(const ChannelParams& params) {
  return special::log_erfc(erf_argument(params)) - std::numbers::ln2;
}

double beta_opt_het(double n) {
  if (!(n >= 0.0)) throw DomainError("beta_opt_het: photon number must be >= 0");
  return n / (2.0 * (1.0 + n));
}

SimulationResult simulate(const ChannelParams& params, const MonteCarloConfig& config) {
  config.validate();
  const ReceiverModel rx = ReceiverModel::for_channel(params);
  rx.validate();
  // Re[z] has variance delta^2 / 2 under p(z|alpha).
  const double sigma = rx.delta / std::numbers::sqrt2;

  const std::uint64_t n_chunks = (config.n_samples + config.chunk_size - 1) / config.chunk_size;
  std::vector<ChunkTally> tallies(n_chunks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t c = next++; c < n_chunks; c = next++) {
      const std::uint64_t begin = c * config.chunk_size;
      const std::uint64_t count = std::min(config.chunk_size, config.n_samples - begin);
      tallies[c] = run_chunk(chunk_key(config.seed, c), count, rx.alpha, sigma, rx.threshold);
    }
  };

  unsigned n_threads = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  n_threads = static_cast<unsigned>(std::min<std::uint64_t>(n_threads, n_chunks));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }

  SimulationResult result;
  for (const ChunkTally& t : tallies) {
    result.errors_when_psi1 += t.psi1;
    result.errors_when_psi2 += t.psi2;
  }
  result.n_samples = config.n_samples;
  result.seed = config.seed;
  const double n = static_cast<double>(config.n_samples);
  result.empirical_error_rate = static_cast<double>(result.errors_when_psi1 + result.errors_when_psi2) / n;
  result.std_error = std::sqrt(result.empirical_error_rate * (1.0 - result.empirical_error_rate) / n);
  return result;
}

}  // namespace entbin::heterodyne
