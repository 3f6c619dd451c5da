#pragma once

namespace entbin {

/// Error probability of a binary equiprobable decision, always in [0, 1/2].
class ErrorProbability {
 public:
  /// Throws DomainError outside [0, 1/2].
  explicit ErrorProbability(double value);
  double value() const { return value_; }
  operator double() const { return value_; }

 private:
  double value_;
};

/// Channel energy split: N photons per use, fraction beta spent on the twin beam.
class ChannelParams {
 public:
  /// Throws DomainError unless N >= 0 and 0 <= beta <= 1.
  ChannelParams(double photon_number, double entanglement_fraction = 0.0);

  double photon_number() const { return n_; }
  double entanglement_fraction() const { return beta_; }

  /// Signal displacement sqrt(2N(1-beta)).
  double alpha() const;
  /// Twin-beam photons beta*N.
  double twb_photons() const;
  /// sqrt(N_lambda / (N_lambda + 2)).
  double lambda() const;
  /// atanh(lambda).
  double gain() const;

 private:
  double n_;
  double beta_;
};

namespace channels {

/// Minimum error for two equiprobable pure states whose overlap is |<1|2>|^2 = exp(-exponent).
/// Stable for exponents near zero and for exponents far beyond the double underflow.
double helstrom_from_exponent(double exponent);
/// Natural log of helstrom_from_exponent.
double log_helstrom_from_exponent(double exponent);

/// Ideal single-mode coherent channel.
ErrorProbability pe_coherent(double n);
double log_pe_coherent(double n);

/// Ideal twin-beam channel at a given entanglement fraction.
ErrorProbability qe_ideal(const ChannelParams& params);
double log_qe_ideal(const ChannelParams& params);

/// max(0, (N-1)/(2N)).
double beta_opt_ideal(double n);

/// qe_ideal at beta_opt_ideal(n).
ErrorProbability qe_optimal(double n);
double log_qe_optimal(double n);

/// Channel whose twin beam comes from an amplifier of gain G (lambda = tanh G).
/// Throws EnergyBudgetExceeded when the twin beam alone carries more than N photons.
ChannelParams params_from_gain(double n, double gain);

}  // namespace channels
}  // namespace entbin
