#include "entbin/channels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entbin/errors.hpp"

namespace entbin {

ErrorProbability::ErrorProbability(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 0.5)) {
    throw DomainError("ErrorProbability: " + std::to_string(value) + " outside [0, 1/2]");
  }
}

ChannelParams::ChannelParams(double photon_number, double entanglement_fraction)
    : n_(photon_number), beta_(entanglement_fraction) {
  if (!(n_ >= 0.0) || !std::isfinite(n_)) {
    throw DomainError("ChannelParams: photon number must be finite and >= 0");
  }
  if (!(beta_ >= 0.0 && beta_ <= 1.0)) {
    throw DomainError("ChannelParams: entanglement fraction must lie in [0, 1]");
  }
}

double ChannelParams::alpha() const { return std::sqrt(2.0 * n_ * (1.0 - beta_)); }

double ChannelParams::twb_photons() const { return beta_ * n_; }

double ChannelParams::lambda() const {
  const double t = twb_photons();
  return std::sqrt(t / (t + 2.0));
}

double ChannelParams::gain() const { return std::atanh(lambda()); }

namespace channels {

double helstrom_from_exponent(double exponent) {
  if (!(exponent >= 0.0)) throw DomainError("helstrom_from_exponent: negative exponent");
  // 1/2 [1 - sqrt(1 - x)] = x / (2 (1 + sqrt(1 - x))), with 1 - x = -expm1(-exponent).
  return 0.5 * std::exp(-exponent) / (1.0 + std::sqrt(-std::expm1(-exponent)));
}

double log_helstrom_from_exponent(double exponent) {
  if (!(exponent >= 0.0)) throw DomainError("log_helstrom_from_exponent: negative exponent");
  return -exponent - std::log(2.0) - std::log1p(std::sqrt(-std::expm1(-exponent)));
}

namespace {

void check_photon_number(double n, const char* what) {
  if (!(n >= 0.0)) throw DomainError(std::string(what) + ": photon number must be >= 0");
}

double ideal_exponent(const ChannelParams& p) {
  const double n = p.photon_number();
  const double b = p.entanglement_fraction();
  return 2.0 * n * (1.0 - b) * (1.0 + b * n);
}

double optimal_exponent(double n) { return n <= 1.0 ? 2.0 * n : 0.5 * (1.0 + n) * (1.0 + n); }

}  // namespace

ErrorProbability pe_coherent(double n) {
  check_photon_number(n, "pe_coherent");
  return ErrorProbability(helstrom_from_exponent(2.0 * n));
}

double log_pe_coherent(double n) {
  check_photon_number(n, "log_pe_coherent");
  return log_helstrom_from_exponent(2.0 * n);
}

ErrorProbability qe_ideal(const ChannelParams& params) {
  return ErrorProbability(helstrom_from_exponent(ideal_exponent(params)));
}

double log_qe_ideal(const ChannelParams& params) {
  return log_helstrom_from_exponent(ideal_exponent(params));
}

double beta_opt_ideal(double n) {
  if (!(n > 1.0)) return 0.0;
  return (n - 1.0) / (2.0 * n);
}

ErrorProbability qe_optimal(double n) {
  check_photon_number(n, "qe_optimal");
  return ErrorProbability(helstrom_from_exponent(optimal_exponent(n)));
}

double log_qe_optimal(double n) {
  check_photon_number(n, "log_qe_optimal");
  return log_helstrom_from_exponent(optimal_exponent(n));
}

ChannelParams params_from_gain(double n, double gain) {
  check_photon_number(n, "params_from_gain");
  if (!(gain >= 0.0) || !std::isfinite(gain)) {
    throw DomainError("params_from_gain: gain must be finite and >= 0");
  }
  // N_lambda = 2 lambda^2 / (1 - lambda^2) = 2 sinh^2 G
  const double s = std::sinh(gain);
  const double twb = 2.0 * s * s;
  if (twb > n * (1.0 + 1e-12)) {
    throw EnergyBudgetExceeded("params_from_gain: twin beam needs " + std::to_string(twb) +
                               " photons but the budget is " + std::to_string(n));
  }
  if (twb == 0.0) return ChannelParams(n, 0.0);
  return ChannelParams(n, std::min(1.0, twb / n));
}

}  // namespace channels
}  // namespace entbin
