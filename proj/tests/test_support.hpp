#ifndef PSTEIN_TESTS_TEST_SUPPORT_HPP
#define PSTEIN_TESTS_TEST_SUPPORT_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "pstein/linalg.hpp"
#include "pstein/matrix.hpp"
#include "pstein/operators.hpp"
#include "pstein/random.hpp"
#include "pstein/stein_transform.hpp"

namespace pstein::testing {

inline bool near(const Matrix& a, const Matrix& b, double tol) {
  return frob_dist(a, b) <= tol;
}

inline Matrix random_scaled(Rng& rng, int dim, double target_frob) {
  Matrix r = random_matrix(rng, dim, dim);
  return r * (target_frob / frob_norm(r));
}

/// Random equation rescaled so that rho(calA) * rho(calB) lands exactly on
/// `target_rho`. Both coefficients scale by the same real factor, under
/// which the built system's radius product scales with power 2n.
inline LinearMatrixEquation random_equation(Rng& rng, int m,
                                            const PeriodicOperator& op,
                                            double target_rho) {
  const Matrix a = random_matrix(rng, m, m);
  const Matrix b = random_matrix(rng, m, m);
  const Matrix c = random_matrix(rng, m, m);
  const LinearMatrixEquation eq(a, b, c, op);
  const SteinSystem sys = build_stein(eq);
  const double rho = spectral_radius(sys.cal_a) * spectral_radius(sys.cal_b);
  if (rho <= 0.0) return eq;
  const double s = std::pow(target_rho / rho, 1.0 / (2.0 * op.period()));
  return LinearMatrixEquation(a * s, b * s, c, op);
}

/// Homogeneous i-fold composition measured without the recursion under
/// test: by additivity it is the difference of the full composition at X
/// and at 0.
inline Matrix h_oracle(const LinearMatrixEquation& eq, int i, const Matrix& x) {
  const Matrix at_zero = iterate_rhs(eq, i, Matrix::zero(eq.dim(), eq.dim()));
  return iterate_rhs(eq, i, x) - at_zero;
}

/// Transpose twisted by the cyclic shift of size 4, f(X) = P^T X^T P.
/// Order-reversing with minimal period 4 (f^2 conjugates by P^2).
inline PeriodicOperator twisted_transpose_op() {
  const Matrix p = primary_permutation(4);
  return PeriodicOperator(
      "twisted_transpose", 4, OperatorKind::kOrderReversing,
      [p](const Matrix& x) { return p.transpose() * x.transpose() * p; }, 4);
}

struct NamedOperator {
  std::string label;
  PeriodicOperator op;
  int dim;
};

/// Every builtin (plus a declared non-minimal period and the twisted
/// transpose), each with a workable size, for corpus-style property tests.
inline std::vector<NamedOperator> operator_corpus() {
  return {
      {"identity", identity_op(1), 3},
      {"identity declared period 2", identity_op(2), 3},
      {"identity declared period 3", identity_op(3), 3},
      {"conjugate", conjugate_op(), 3},
      {"transpose", transpose_op(), 3},
      {"hermitian", hermitian_op(), 3},
      {"anti_transpose", anti_transpose_op(), 3},
      {"perm_similarity period 3", perm_similarity_op(primary_permutation(3)), 3},
      {"perm_similarity period 4", perm_similarity_op(primary_permutation(4)), 4},
      {"twisted transpose period 4", twisted_transpose_op(), 4},
  };
}

/// Least-squares slope of y against 0, 1, 2, ..., skipping the first
/// `skip` samples.
inline double fit_slope(const std::vector<double>& y, std::size_t skip = 0) {
  const std::size_t n = y.size() > skip ? y.size() - skip : 0;
  if (n < 2) return 0.0;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double x = static_cast<double>(k);
    sx += x;
    sy += y[skip + k];
    sxx += x * x;
    sxy += x * y[skip + k];
  }
  const double d = static_cast<double>(n);
  return (d * sxy - sx * sy) / (d * sxx - sx * sx);
}

}  // namespace pstein::testing

#endif  // PSTEIN_TESTS_TEST_SUPPORT_HPP
