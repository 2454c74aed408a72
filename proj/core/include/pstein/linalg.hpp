#ifndef PSTEIN_LINALG_HPP
#define PSTEIN_LINALG_HPP

#include <vector>

#include "pstein/matrix.hpp"

namespace pstein {

/// Eigenvalue multiset of a square matrix, in the order the backend
/// produced it. No ordering is guaranteed; compare as multisets.
struct Spectrum {
  std::vector<Complex> values;

  int size() const { return static_cast<int>(values.size()); }
  /// Largest modulus, 0 for an empty spectrum.
  double radius() const;
};

/// Kronecker product, block (i,j) of the result equals a(i,j) * b.
Matrix kron(const Matrix& a, const Matrix& b);

/// Column-stacking: vec(x) is the rows*cols x 1 matrix holding the
/// columns of x, one after another.
Matrix vec(const Matrix& x);

/// Inverse of vec for the given target shape. Bit-exact round trip:
/// unvec(vec(x), x.rows(), x.cols()) == x.
Matrix unvec(const Matrix& v, int rows, int cols);

/// All eigenvalues of a square matrix. Throws EigenDecompositionError if
/// the underlying iteration fails to converge.
Spectrum eigenvalues(const Matrix& a);

/// Spectral radius, max |lambda|.
double spectral_radius(const Matrix& a);

/// Solve m * x = rhs for square m with one or more right-hand sides.
/// Throws SingularMatrixError (carrying the rcond estimate) when the
/// reciprocal condition number falls below 1e-14.
Matrix solve_dense(const Matrix& m, const Matrix& rhs);

/// Minimum-norm least-squares solution of m * x = rhs. Never throws on
/// rank deficiency; the caller decides whether the residual is acceptable.
Matrix solve_least_squares(const Matrix& m, const Matrix& rhs);

/// Reciprocal condition number estimate of a square matrix (1-norm).
double rcond_estimate(const Matrix& m);

/// Distance between two spectra as unordered multisets: greedily pair the
/// globally closest values, remove them, repeat; the distance is the
/// largest paired gap. Infinity when the sizes differ.
double spectrum_match_distance(const Spectrum& lhs, const Spectrum& rhs);

}  // namespace pstein

#endif  // PSTEIN_LINALG_HPP
