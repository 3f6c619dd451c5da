#pragma once

#include <complex>
#include <iosfwd>
#include <span>
#include <vector>

namespace entbin::fock {

using Complex = std::complex<double>;

/// Adaptive truncation of the Fock basis.
struct TruncationPolicy {
  double tail_tolerance = 1e-14;  ///< largest norm deficit a constructed state may carry
  int max_cutoff = 512;

  /// Throws DomainError unless 0 < tail_tolerance < 1 and max_cutoff >= 2.
  void validate() const;
};

/// Single-mode state truncated to photon numbers 0..cutoff-1.
class FockVector {
 public:
  /// Throws DomainError on an empty amplitude list or a squared norm above 1 + 1e-12.
  explicit FockVector(std::vector<Complex> amplitudes);

  int cutoff() const { return static_cast<int>(amplitudes_.size()); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }

  /// Amplitude of |k>; zero beyond the cutoff.
  Complex operator[](int k) const {
    return k >= 0 && k < cutoff() ? amplitudes_[static_cast<std::size_t>(k)] : Complex{};
  }

  double squared_norm() const;
  /// 1 - squared_norm(): the weight lost to truncation.
  double norm_deficit() const { return 1.0 - squared_norm(); }

 private:
  std::vector<Complex> amplitudes_;
};

/// Two-mode state with amplitudes indexed by (p, q), p < cutoff_a, q < cutoff_b.
class TwoModeFockVector {
 public:
  /// `amplitudes` is row-major in (p, q); same norm rules as FockVector.
  TwoModeFockVector(int cutoff_a, int cutoff_b, std::vector<Complex> amplitudes);

  int cutoff_a() const { return cutoff_a_; }
  int cutoff_b() const { return cutoff_b_; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }

  Complex at(int p, int q) const {
    if (p < 0 || q < 0 || p >= cutoff_a_ || q >= cutoff_b_) return {};
    return amplitudes_[static_cast<std::size_t>(p) * static_cast<std::size_t>(cutoff_b_) +
                       static_cast<std::size_t>(q)];
  }

  double squared_norm() const;
  double norm_deficit() const { return 1.0 - squared_norm(); }

  /// Product state a (x) b.
  static TwoModeFockVector product(const FockVector& a, const FockVector& b);

 private:
  int cutoff_a_;
  int cutoff_b_;
  std::vector<Complex> amplitudes_;
};

/// Coherent state D(alpha)|0>, cut where the Poisson tail drops below the policy tolerance.
FockVector coherent_state(Complex alpha, const TruncationPolicy& policy = {});

/// Twin-beam state sqrt(1-lambda^2) sum_p lambda^p |p>|p>, 0 <= lambda < 1.
TwoModeFockVector twb_state(double lambda, const TruncationPolicy& policy = {});

/// Matrix element <m|D(alpha)|n>.
Complex displacement_element(int m, int n, Complex alpha);

/// Applies D(alpha) to mode a, enlarging the mode-a cutoff until the truncation leakage
/// is within the policy tolerance.
TwoModeFockVector displace_mode_a(const TwoModeFockVector& state, Complex alpha,
                                  const TruncationPolicy& policy = {});

/// <u|v>, conjugate-linear in u. Shorter vectors are zero-padded.
Complex inner_product(const FockVector& u, const FockVector& v);
Complex inner_product(const TwoModeFockVector& u, const TwoModeFockVector& v);

/// Debug dump, one `index,re,im` line per amplitude after a header line.
void write_csv(std::ostream& os, const FockVector& state);

}  // namespace entbin::fock
