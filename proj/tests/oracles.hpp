#pragma once

// Independent reference computations for the unit tests. Nothing here calls into the library.

#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using LD = long double;

/// Maclaurin series of erf in long double; fine for |x| <= 3.
inline LD erf_maclaurin(LD x) {
  LD term = x;
  LD sum = x;
  for (int n = 1; n < 400; ++n) {
    term *= -x * x / n;
    const LD add = term / (2 * n + 1);
    sum += add;
    if (std::fabs(add) < 1e-30L) break;
  }
  return 2.0L / std::sqrt(3.14159265358979323846264338327950288L) * sum;
}

/// L_n^(a)(x) from the explicit sum sum_k (-1)^k C(n+a, n-k) x^k / k!; for moderate n only.
inline LD laguerre_sum(int n, int a, LD x) {
  LD sum = 0;
  for (int k = 0; k <= n; ++k) {
    const LD binom = std::exp(std::lgamma(static_cast<LD>(n + a + 1)) - std::lgamma(static_cast<LD>(n - k + 1)) -
                              std::lgamma(static_cast<LD>(a + k + 1)));
    const LD term = binom * std::pow(x, k) / std::exp(std::lgamma(static_cast<LD>(k + 1)));
    sum += (k % 2 == 0 ? term : -term);
  }
  return sum;
}

/// Displacement matrix D(alpha) on 0..dim-1 from the ladder identity
///   <m|D|n> = (sqrt(m) <m-1|D|n-1> - conj(alpha) <m|D|n-1>) / sqrt(n),
/// seeded with the coherent-state column <m|D|0>.
inline std::vector<std::vector<std::complex<LD>>> displacement_matrix(int dim, std::complex<LD> alpha) {
  std::vector<std::vector<std::complex<LD>>> d(dim, std::vector<std::complex<LD>>(dim));
  const LD x = std::norm(alpha);
  std::complex<LD> c = std::exp(-x / 2);
  for (int m = 0; m < dim; ++m) {
    d[m][0] = c;
    c *= alpha / std::sqrt(static_cast<LD>(m + 1));
  }
  for (int n = 1; n < dim; ++n) {
    for (int m = 0; m < dim; ++m) {
      std::complex<LD> v = -std::conj(alpha) * d[m][n - 1];
      if (m > 0) v += std::sqrt(static_cast<LD>(m)) * d[m - 1][n - 1];
      d[m][n] = v / std::sqrt(static_cast<LD>(n));
    }
  }
  return d;
}

/// Helstrom error 1/2 [1 - sqrt(1 - e^{-y})] in long double.
inline LD helstrom(LD exponent) { return 0.5L * (1.0L - std::sqrt(1.0L - std::exp(-exponent))); }

/// Brute-force grid scan for the maximizer of f on [lo, hi].
template <class F>
double grid_argmax(F f, double lo, double hi, int n) {
  double best_x = lo;
  double best = f(lo);
  for (int i = 1; i <= n; ++i) {
    const double x = lo + (hi - lo) * i / n;
    const double v = f(x);
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  return best_x;
}

}  // namespace oracle
