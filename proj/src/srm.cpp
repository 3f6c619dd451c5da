#include "entbin/srm.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "entbin/errors.hpp"

namespace entbin::srm {

namespace {

constexpr double kNormalizationSlack = 1e-8;
constexpr double kDegeneracy = 1e-12;

struct Eigen2 {
  double hi;
  double lo;
};

Eigen2 hermitian_eigenvalues(const Matrix2& g) {
  const double a = g(0, 0).real();
  const double d = g(1, 1).real();
  const double mean = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), std::abs(g(0, 1)));
  const double hi = mean + radius;
  // The small eigenvalue from the determinant avoids cancellation in mean - radius.
  const double det = a * d - std::norm(g(0, 1));
  return {hi, hi > 0.0 ? det / hi : mean - radius};
}

Matrix2 multiply(const Matrix2& x, const Matrix2& y) {
  Matrix2 r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) r(i, j) = x(i, 0) * y(0, j) + x(i, 1) * y(1, j);
  }
  return r;
}

FockVector combine(const FockVector& psi1, const FockVector& psi2, Complex c1, Complex c2) {
  const int k = std::max(psi1.cutoff(), psi2.cutoff());
  std::vector<Complex> amps(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) amps[static_cast<std::size_t>(i)] = c1 * psi1[i] + c2 * psi2[i];
  return FockVector(std::move(amps));
}

}  // namespace

Matrix2 gram_matrix(const FockVector& psi1, const FockVector& psi2) {
  if (std::abs(psi1.norm_deficit()) > kNormalizationSlack ||
      std::abs(psi2.norm_deficit()) > kNormalizationSlack) {
    throw DomainError("gram_matrix: signal states must be normalized to within 1e-8");
  }
  Matrix2 g;
  g(0, 0) = psi1.squared_norm();
  g(1, 1) = psi2.squared_norm();
  g(0, 1) = fock::inner_product(psi1, psi2);
  g(1, 0) = std::conj(g(0, 1));
  return g;
}

Matrix2 inverse_sqrt(const Matrix2& g) {
  const auto [hi, lo] = hermitian_eigenvalues(g);
  if (!(lo > 0.0)) throw DegenerateEnsemble("inverse_sqrt: matrix is not positive definite");
  Matrix2 r;
  if (hi - lo <= 1e-15 * hi) {
    const double s = 1.0 / std::sqrt(0.5 * (hi + lo));
    r(0, 0) = s;
    r(1, 1) = s;
    return r;
  }
  // f(G) = f(hi) P_hi + f(lo) P_lo with P_hi = (G - lo)/(hi - lo), P_lo = (hi - G)/(hi - lo).
  const double fh = 1.0 / std::sqrt(hi);
  const double fl = 1.0 / std::sqrt(lo);
  const double span = hi - lo;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Complex gij = g(i, j);
      const double delta = i == j ? 1.0 : 0.0;
      r(i, j) = (fh * (gij - lo * delta) + fl * (hi * delta - gij)) / span;
    }
  }
  return r;
}

BinaryPovm square_root_measurement(const FockVector& psi1, const FockVector& psi2) {
  const Matrix2 g = gram_matrix(psi1, psi2);
  const double kappa = std::abs(g(0, 1)) / std::sqrt(g(0, 0).real() * g(1, 1).real());
  if (kappa > 1.0 - kDegeneracy) {
    throw DegenerateEnsemble("square_root_measurement: signal states are indistinguishable");
  }
  const Matrix2 w = inverse_sqrt(g);

  // mu_j = sum_i psi_i W_ij
  FockVector mu1 = combine(psi1, psi2, w(0, 0), w(1, 0));
  FockVector mu2 = combine(psi1, psi2, w(0, 1), w(1, 1));
  const auto fix_phase = [&](FockVector& mu, const FockVector& psi) {
    const Complex ov = fock::inner_product(psi, mu);
    if (std::abs(ov) == 0.0) return;
    const Complex rot = std::conj(ov) / std::abs(ov);
    std::vector<Complex> amps(mu.amplitudes().begin(), mu.amplitudes().end());
    for (Complex& c : amps) c *= rot;
    mu = FockVector(std::move(amps));
  };
  fix_phase(mu1, psi1);
  fix_phase(mu2, psi2);

  // Matrix of (M1 + M2 - I) in the signal basis, then mapped to an orthonormal basis of the span.
  const std::array<const FockVector*, 2> psi{&psi1, &psi2};
  Matrix2 a;
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) {
      a(i, k) = fock::inner_product(*psi[i], mu1) * fock::inner_product(mu1, *psi[k]) +
                fock::inner_product(*psi[i], mu2) * fock::inner_product(mu2, *psi[k]) - g(i, k);
    }
  }
  const Matrix2 x = multiply(multiply(w, a), w);
  const double mean = 0.5 * (x(0, 0).real() + x(1, 1).real());
  const double radius = std::hypot(0.5 * (x(0, 0).real() - x(1, 1).real()), std::abs(x(0, 1)));
  const double defect = std::max(std::abs(mean + radius), std::abs(mean - radius));
  const double ortho = std::abs(fock::inner_product(mu1, mu2));

  return BinaryPovm{std::move(mu1), std::move(mu2), defect, ortho};
}

ErrorProbability srm_error_probability(const BinaryPovm& povm, const FockVector& psi1,
                                       const FockVector& psi2) {
  const double wrong1 = std::norm(fock::inner_product(povm.mu1, psi2));
  const double wrong2 = std::norm(fock::inner_product(povm.mu2, psi1));
  return ErrorProbability(std::min(0.5, 0.5 * (wrong1 + wrong2)));
}

ErrorProbability srm_error_probability(const FockVector& psi1, const FockVector& psi2) {
  try {
    return srm_error_probability(square_root_measurement(psi1, psi2), psi1, psi2);
  } catch (const DegenerateEnsemble&) {
    return ErrorProbability(0.5);
  }
}

ErrorProbability helstrom_bound(double overlap_sq) {
  if (!(overlap_sq >= 0.0 && overlap_sq <= 1.0)) {
    throw DomainError("helstrom_bound: overlap_sq must lie in [0, 1]");
  }
  return ErrorProbability(0.5 * overlap_sq / (1.0 + std::sqrt(1.0 - overlap_sq)));
}

}  // namespace entbin::srm
