#include "entbin/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "entbin/errors.hpp"

namespace entbin::special {

namespace {

constexpr double kSeriesSwitch = 2.0;
constexpr double kAsymptoticSwitch = 6.0;
constexpr double kEps = 1e-17;

// erf for |x| < kSeriesSwitch; every term is positive so there is no cancellation.
double erf_series(double x) {
  const double two_x2 = 2.0 * x * x;
  double term = x;
  double sum = x;
  for (int n = 1; n < 200; ++n) {
    term *= two_x2 / (2.0 * n + 1.0);
    sum += term;
    if (std::abs(term) < kEps * std::abs(sum)) break;
  }
  return 2.0 / std::sqrt(std::numbers::pi) * std::exp(-x * x) * sum;
}

// Even contraction of the Laplace continued fraction:
//   erfc(x) = 2x exp(-x^2)/sqrt(pi) / (2x^2+1 - 1*2/(2x^2+5 - 3*4/(2x^2+9 - ...)))
// Evaluated with the modified Lentz algorithm. Returns the denominator.
double erfc_fraction(double x) {
  constexpr double tiny = 1e-300;
  const double two_x2 = 2.0 * x * x;
  double f = two_x2 + 1.0;
  double c = f;
  double d = 0.0;
  for (int k = 1; k < 5000; ++k) {
    const double a = -(2.0 * k - 1.0) * (2.0 * k);
    const double b = two_x2 + 1.0 + 4.0 * k;
    d = b + a * d;
    if (std::abs(d) < tiny) d = tiny;
    c = b + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < kEps) break;
  }
  return f;
}

double erfc_positive_tail(double x) {
  return 2.0 * x * std::exp(-x * x) / std::sqrt(std::numbers::pi) / erfc_fraction(x);
}

}  // namespace

void ScalarTolerance::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_iter < 1) {
    throw DomainError("ScalarTolerance: tolerances must be positive and max_iter >= 1");
  }
}

double erf(double x) {
  if (std::isnan(x)) return x;
  const double ax = std::abs(x);
  if (ax < kSeriesSwitch) return erf_series(x);
  const double r = 1.0 - erfc_positive_tail(ax);
  return x < 0 ? -r : r;
}

double erfc(double x) {
  if (std::isnan(x)) return x;
  if (x >= kSeriesSwitch) return erfc_positive_tail(x);
  if (x <= -kSeriesSwitch) return 2.0 - erfc_positive_tail(-x);
  return 1.0 - erf_series(x);
}

double detail::log_erfc_continued_fraction(double x) {
  return -x * x + std::log(2.0 * x / std::sqrt(std::numbers::pi)) - std::log(erfc_fraction(x));
}

double detail::log_erfc_asymptotic(double x) {
  // erfc(x) ~ exp(-x^2)/(x sqrt(pi)) * sum_n (-1)^n (2n-1)!! / (2x^2)^n
  const double inv = 1.0 / (2.0 * x * x);
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n < 400; ++n) {
    const double next = -term * (2.0 * n - 1.0) * inv;
    if (std::abs(next) >= std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) < kEps) break;
  }
  return -x * x - std::log(x * std::sqrt(std::numbers::pi)) + std::log(sum);
}

double log_erfc(double x) {
  if (std::isnan(x)) return x;
  if (x < kSeriesSwitch) return std::log(erfc(x));
  if (x < kAsymptoticSwitch) return detail::log_erfc_continued_fraction(x);
  return detail::log_erfc_asymptotic(x);
}

double laguerre(int n, double a, double x) {
  if (n < 0) throw DomainError("laguerre: negative degree");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + a - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + a - x) * cur - (k + a) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

OptimumPoint golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                                const ScalarTolerance& tol) {
  tol.validate();
  if (!(lo < hi)) throw DomainError("golden_section_max: need lo < hi");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int iter = 0;
  while (b - a > tol.abs_tol) {
    if (++iter > tol.max_iter) {
      throw IterationLimit("golden_section_max: no convergence after " +
                           std::to_string(tol.max_iter) + " iterations");
    }
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  OptimumPoint best{0.5 * (a + b), f(0.5 * (a + b))};
  // A maximum sitting on the boundary is only approached, never sampled, by the interior probes.
  for (double edge : {lo, hi}) {
    if (std::abs(edge - best.x) <= tol.abs_tol) {
      const double fe = f(edge);
      if (fe > best.value) best = {edge, fe};
    }
  }
  return best;
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   const ScalarTolerance& tol) {
  tol.validate();
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi) || std::isnan(flo) || std::isnan(fhi)) {
    throw NoSignChange("bisect_root: f(" + std::to_string(lo) + ") and f(" + std::to_string(hi) +
                       ") have the same sign");
  }
  for (int iter = 0; iter < tol.max_iter; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (std::abs(fm) <= tol.abs_tol) return mid;
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
    const double root = 0.5 * (lo + hi);
    if (hi - lo <= tol.rel_tol * std::abs(root) ||
        hi - lo <= 4.0 * std::numeric_limits<double>::min()) {
      return root;
    }
  }
  throw IterationLimit("bisect_root: no convergence after " + std::to_string(tol.max_iter) +
                       " iterations");
}

}  // namespace entbin::special
