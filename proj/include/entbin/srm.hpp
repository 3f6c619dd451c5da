#pragma once

#include <array>

#include "entbin/channels.hpp"
#include "entbin/fock.hpp"

namespace entbin::srm {

using fock::Complex;
using fock::FockVector;

/// 2x2 Hermitian matrix, row-major.
struct Matrix2 {
  std::array<Complex, 4> m{};

  Complex operator()(int i, int j) const { return m[static_cast<std::size_t>(2 * i + j)]; }
  Complex& operator()(int i, int j) { return m[static_cast<std::size_t>(2 * i + j)]; }
};

/// Square-root measurement M_j = |mu_j><mu_j| for a pair of pure states.
struct BinaryPovm {
  FockVector mu1;
  FockVector mu2;
  /// Operator-norm distance of M1 + M2 from the identity on span{psi1, psi2}.
  double completeness_defect;
  /// |<mu1|mu2>|.
  double orthogonality_defect;
};

/// [[<1|1>, <1|2>], [<2|1>, <2|2>]]. Both states must be normalized to within 1e-8.
Matrix2 gram_matrix(const FockVector& psi1, const FockVector& psi2);

/// Inverse square root of a positive-definite Hermitian 2x2 matrix via its spectral projectors.
Matrix2 inverse_sqrt(const Matrix2& g);

/// mu = Psi (Psi^dagger Psi)^(-1/2), phases fixed so that <psi_j|mu_j> > 0.
/// Throws DegenerateEnsemble when |<psi1|psi2>| > 1 - 1e-12.
BinaryPovm square_root_measurement(const FockVector& psi1, const FockVector& psi2);

/// 1/2 (|<mu1|psi2>|^2 + |<mu2|psi1>|^2).
ErrorProbability srm_error_probability(const BinaryPovm& povm, const FockVector& psi1,
                                       const FockVector& psi2);

/// Builds the measurement and evaluates it. A degenerate ensemble has the known answer 1/2.
ErrorProbability srm_error_probability(const FockVector& psi1, const FockVector& psi2);

/// 1/2 [1 - sqrt(1 - overlap_sq)] for overlap_sq in [0, 1].
ErrorProbability helstrom_bound(double overlap_sq);

}  // namespace entbin::srm
