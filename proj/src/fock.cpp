#include "entbin/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "entbin/errors.hpp"
#include "entbin/output.hpp"
#include "entbin/special_functions.hpp"

namespace entbin::fock {

namespace {

constexpr double kNormSlack = 1e-12;

// Neumaier-compensated sum of |c|^2.
double sum_squares(std::span<const Complex> amps) {
  double s = 0.0;
  double comp = 0.0;
  for (const Complex& c : amps) {
    const double v = std::norm(c);
    const double t = s + v;
    comp += std::abs(s) >= v ? (s - t) + v : (v - t) + s;
    s = t;
  }
  return s + comp;
}

void check_norm(double squared_norm, const char* what) {
  if (!(squared_norm <= 1.0 + kNormSlack)) {
    throw DomainError(std::string(what) + ": squared norm " + std::to_string(squared_norm) +
                      " exceeds 1");
  }
}

}  // namespace

void TruncationPolicy::validate() const {
  if (!(tail_tolerance > 0.0 && tail_tolerance < 1.0)) {
    throw DomainError("TruncationPolicy: tail_tolerance must lie in (0, 1)");
  }
  if (max_cutoff < 2) throw DomainError("TruncationPolicy: max_cutoff must be >= 2");
}

FockVector::FockVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) throw DomainError("FockVector: cutoff must be >= 1");
  check_norm(squared_norm(), "FockVector");
}

double FockVector::squared_norm() const { return sum_squares(amplitudes_); }

TwoModeFockVector::TwoModeFockVector(int cutoff_a, int cutoff_b, std::vector<Complex> amplitudes)
    : cutoff_a_(cutoff_a), cutoff_b_(cutoff_b), amplitudes_(std::move(amplitudes)) {
  if (cutoff_a_ < 1 || cutoff_b_ < 1) throw DomainError("TwoModeFockVector: cutoff must be >= 1");
  if (amplitudes_.size() != static_cast<std::size_t>(cutoff_a_) * static_cast<std::size_t>(cutoff_b_)) {
    throw DomainError("TwoModeFockVector: amplitude count does not match cutoffs");
  }
  check_norm(squared_norm(), "TwoModeFockVector");
}

double TwoModeFockVector::squared_norm() const { return sum_squares(amplitudes_); }

TwoModeFockVector TwoModeFockVector::product(const FockVector& a, const FockVector& b) {
  std::vector<Complex> amps;
  amps.reserve(static_cast<std::size_t>(a.cutoff()) * static_cast<std::size_t>(b.cutoff()));
  for (const Complex& x : a.amplitudes()) {
    for (const Complex& y : b.amplitudes()) amps.push_back(x * y);
  }
  return TwoModeFockVector(a.cutoff(), b.cutoff(), std::move(amps));
}

FockVector coherent_state(Complex alpha, const TruncationPolicy& policy) {
  policy.validate();
  const double x = std::norm(alpha);
  // Poisson weights p_k = e^-x x^k / k!. For K + 1 > x the tail sum_{k>=K} p_k is bounded by
  // p_K / (1 - x/(K+1)).
  auto log_weight = [x](int k) {
    return k == 0 ? -x : -x + k * std::log(x) - std::lgamma(k + 1.0);
  };
  int cutoff = 1;
  for (;; ++cutoff) {
    if (cutoff > policy.max_cutoff) {
      throw TruncationOverflow("coherent_state: |alpha|^2 = " + std::to_string(x) +
                               " needs more than max_cutoff = " +
                               std::to_string(policy.max_cutoff));
    }
    if (x == 0.0) break;
    const double ratio = x / (cutoff + 1.0);
    if (ratio < 1.0 && std::exp(log_weight(cutoff)) / (1.0 - ratio) <= policy.tail_tolerance) break;
  }

  std::vector<Complex> amps(static_cast<std::size_t>(cutoff));
  if (x < 600.0) {
    // c_k = c_{k-1} alpha / sqrt(k); rounding grows like sqrt(k) instead of with lgamma(k)
    Complex c = std::exp(-0.5 * x);
    for (int k = 0; k < cutoff; ++k) {
      amps[static_cast<std::size_t>(k)] = c;
      c *= alpha / std::sqrt(k + 1.0);
    }
  } else {
    const double phase = std::arg(alpha);
    for (int k = 0; k < cutoff; ++k) {
      amps[static_cast<std::size_t>(k)] = std::polar(std::exp(0.5 * log_weight(k)), k * phase);
    }
  }
  return FockVector(std::move(amps));
}

TwoModeFockVector twb_state(double lambda, const TruncationPolicy& policy) {
  policy.validate();
  if (!(lambda >= 0.0 && lambda < 1.0)) {
    throw DomainError("twb_state: lambda must lie in [0, 1), got " + std::to_string(lambda));
  }
  // Residual norm beyond the cutoff K is lambda^(2K).
  const double lambda2 = lambda * lambda;
  int cutoff = 1;
  double residual = lambda2;
  while (residual > policy.tail_tolerance) {
    ++cutoff;
    residual *= lambda2;
    if (cutoff > policy.max_cutoff) {
      throw TruncationOverflow("twb_state: lambda = " + std::to_string(lambda) +
                               " needs more than max_cutoff = " +
                               std::to_string(policy.max_cutoff));
    }
  }

  const auto k = static_cast<std::size_t>(cutoff);
  std::vector<Complex> amps(k * k);
  double amp = std::sqrt(1.0 - lambda2);
  for (std::size_t p = 0; p < k; ++p) {
    amps[p * k + p] = amp;
    amp *= lambda;
  }
  return TwoModeFockVector(cutoff, cutoff, std::move(amps));
}

Complex displacement_element(int m, int n, Complex alpha) {
  if (m < 0 || n < 0) throw DomainError("displacement_element: negative photon number");
  const double x = std::norm(alpha);
  if (x == 0.0) return m == n ? Complex{1.0, 0.0} : Complex{};

  const int lo = std::min(m, n);
  const int diff = std::abs(m - n);
  const double log_prefactor =
      0.5 * (std::lgamma(lo + 1.0) - std::lgamma(lo + diff + 1.0)) + 0.5 * diff * std::log(x) - 0.5 * x;
  const double magnitude = std::exp(log_prefactor) * special::laguerre(lo, diff, x);
  // m >= n carries alpha^(m-n); m < n carries (-conj(alpha))^(n-m).
  const double theta = std::arg(alpha);
  const double phase = m >= n ? diff * theta : diff * (std::numbers::pi - theta);
  return std::polar(magnitude, phase);
}

TwoModeFockVector displace_mode_a(const TwoModeFockVector& state, Complex alpha,
                                  const TruncationPolicy& policy) {
  policy.validate();
  if (alpha == Complex{}) return state;

  const int in_a = state.cutoff_a();
  const int cut_b = state.cutoff_b();
  const double in_norm = state.squared_norm();
  const double r = std::abs(alpha);
  int out_a = std::min(policy.max_cutoff, in_a + static_cast<int>(std::ceil(r * r + 8.0 * r + 8.0)));

  while (true) {
    std::vector<Complex> column(static_cast<std::size_t>(out_a));
    std::vector<Complex> out(static_cast<std::size_t>(out_a) * static_cast<std::size_t>(cut_b));
    for (int n = 0; n < in_a; ++n) {
      bool any = false;
      for (int q = 0; q < cut_b; ++q) any = any || state.at(n, q) != Complex{};
      if (!any) continue;
      for (int m = 0; m < out_a; ++m) column[static_cast<std::size_t>(m)] = displacement_element(m, n, alpha);
      for (int q = 0; q < cut_b; ++q) {
        const Complex c = state.at(n, q);
        if (c == Complex{}) continue;
        for (int m = 0; m < out_a; ++m) {
          out[static_cast<std::size_t>(m) * static_cast<std::size_t>(cut_b) + static_cast<std::size_t>(q)] +=
              column[static_cast<std::size_t>(m)] * c;
        }
      }
    }
    const double leakage = in_norm - sum_squares(out);
    if (leakage <= policy.tail_tolerance) {
      return TwoModeFockVector(out_a, cut_b, std::move(out));
    }
    if (out_a >= policy.max_cutoff) {
      throw TruncationOverflow("displace_mode_a: leakage " + std::to_string(leakage) +
                               " exceeds tolerance at max_cutoff = " +
                               std::to_string(policy.max_cutoff));
    }
    out_a = std::min(policy.max_cutoff, out_a + 16);
  }
}

Complex inner_product(const FockVector& u, const FockVector& v) {
  const int k = std::min(u.cutoff(), v.cutoff());
  Complex s{};
  for (int i = 0; i < k; ++i) s += std::conj(u[i]) * v[i];
  return s;
}

Complex inner_product(const TwoModeFockVector& u, const TwoModeFockVector& v) {
  const int ka = std::min(u.cutoff_a(), v.cutoff_a());
  const int kb = std::min(u.cutoff_b(), v.cutoff_b());
  Complex s{};
  for (int p = 0; p < ka; ++p) {
    for (int q = 0; q < kb; ++q) s += std::conj(u.at(p, q)) * v.at(p, q);
  }
  return s;
}

void write_csv(std::ostream& os, const FockVector& state) {
  os << "index,re,im\n";
  for (int k = 0; k < state.cutoff(); ++k) {
    os << k << ',' << output::format_scientific(state[k].real(), 17) << ','
       << output::format_scientific(state[k].imag(), 17) << '\n';
  }
}

}  // namespace entbin::fock
