#ifndef PSTEIN_SOLVABILITY_HPP
#define PSTEIN_SOLVABILITY_HPP

#include <string>
#include <vector>

#include "pstein/linalg.hpp"
#include "pstein/matrix.hpp"
#include "pstein/stein_transform.hpp"

namespace pstein {

/// Unique-solvability diagnostics of a Stein system.
struct SolvabilityReport {
  Spectrum spectrum_cal_a;
  Spectrum spectrum_cal_b;
  /// No eigenvalue product lambda * mu falls on 1 within tolerance.
  bool reciprocal_free = false;
  /// Unique solvability as certified by the reciprocal-free test (a
  /// sufficient condition; see notes).
  bool unique = false;
  /// rho(calA) * rho(calB).
  double rho = 0.0;
  bool rho_lt_one = false;
  std::vector<std::string> notes;
};

/// True iff no lambda in spec_a and mu in spec_b satisfy
/// |lambda * mu - 1| <= tol * (1 + |lambda| |mu|). Zeros never violate the
/// predicate on their own: a zero would need an infinite partner, and
/// finite spectra have none.
bool reciprocal_free(const Spectrum& spec_a, const Spectrum& spec_b,
                     double tol = 1e-8);

/// Evaluate the reciprocal-free condition and the spectral-radius
/// contraction test for a Stein system.
SolvabilityReport check_unique(const SteinSystem& sys, double tol = 1e-8);

/// The m^2 x m^2 permutation matrix implementing the anti-transpose on
/// column-stacked matrices: perm * vec(X) = vec(antitranspose(X)).
Matrix anti_transpose_vec_permutation(int m);

/// Linearization of X -> A * antitranspose(X) * B on column-stacked
/// matrices, (B^T kron A) * perm.
Matrix anti_transpose_linearization(const Matrix& a, const Matrix& b);

/// Predicted spectrum of the linearization above, computed from the m
/// eigenvalues lambda_i of A * antitranspose(B) alone: each lambda_i,
/// plus +/- sqrt(lambda_i * lambda_j) for every unordered pair i < j
/// (principal square root; the sign pair makes the branch irrelevant).
Spectrum anti_transpose_spectrum_prediction(const Matrix& a, const Matrix& b);

/// Unique-solvability test for X = A * antitranspose(X) * B + C, decided
/// entirely from the small spectrum of A * antitranspose(B).
struct AntiTransposeUniqueReport {
  Spectrum spectrum_afb;  ///< eigenvalues of A * antitranspose(B)
  int minus_one_multiplicity = 0;
  /// The spectrum with the -1 cluster removed is reciprocal free against
  /// itself.
  bool rest_reciprocal_free = false;
  /// Unique iff rest_reciprocal_free and -1 is at most simple. For this
  /// operator the condition is necessary and sufficient, not merely
  /// sufficient.
  bool unique = false;
  std::vector<std::string> notes;
};

AntiTransposeUniqueReport anti_transpose_unique(const Matrix& a, const Matrix& b,
                                                double tol = 1e-8);

}  // namespace pstein

#endif  // PSTEIN_SOLVABILITY_HPP
