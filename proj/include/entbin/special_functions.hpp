#pragma once

#include <functional>

namespace entbin::special {

struct ScalarTolerance {
  double abs_tol = 1e-12;
  double rel_tol = 1e-14;
  int max_iter = 500;

  /// Throws DomainError unless both tolerances are positive and max_iter >= 1.
  void validate() const;
};

/// Error function, 2/sqrt(pi) * integral_0^x exp(-t^2) dt.
///
/// |x| < 2 uses the all-positive series exp(-x^2) sum 2^n x^(2n+1) / (2n+1)!!,
/// larger arguments go through the erfc continued fraction.
double erf(double x);

/// Complementary error function, accurate in the far tail until exp(-x^2) underflows.
double erfc(double x);

/// log(erfc(x)), finite for every finite x (no underflow for large x).
double log_erfc(double x);

/// Laguerre polynomial L_n^(a)(x) by the three-term recurrence in the degree.
double laguerre(int n, double a, double x);

struct OptimumPoint {
  double x;
  double value;
};

/// Golden-section search for the maximum of f on [lo, hi].
/// Assumes f is unimodal; otherwise a local maximum is returned.
OptimumPoint golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                                const ScalarTolerance& tol = {});

/// Bisection root of f on [lo, hi]; requires f(lo) and f(hi) of opposite sign.
double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   const ScalarTolerance& tol = {});

}  // namespace entbin::special

namespace entbin::special::detail {

/// log(erfc(x)) from the continued fraction, x >= 1.
double log_erfc_continued_fraction(double x);

/// log(erfc(x)) from the divergent asymptotic series truncated at its smallest term, x >= 4.
double log_erfc_asymptotic(double x);

}  // namespace entbin::special::detail
