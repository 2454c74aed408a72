#ifndef PSTEIN_STEIN_TRANSFORM_HPP
#define PSTEIN_STEIN_TRANSFORM_HPP

#include "pstein/matrix.hpp"
#include "pstein/operators.hpp"

namespace pstein {

/// The fixed-point problem X = A f(X) B + C for a periodic operator f.
/// All coefficients are m x m and f must accept size m.
struct LinearMatrixEquation {
  LinearMatrixEquation(Matrix a, Matrix b, Matrix c, PeriodicOperator op);

  Matrix a;
  Matrix b;
  Matrix c;
  PeriodicOperator op;

  int dim() const { return a.rows(); }
  int period() const { return op.period(); }
};

/// The ordinary Stein equation X = calA * X * calB + calC associated with
/// a LinearMatrixEquation. Every solution of the original equation solves
/// it; recovery maps its solutions back.
struct SteinSystem {
  Matrix cal_a;
  Matrix cal_b;
  Matrix cal_c;

  int dim() const { return cal_a.rows(); }
};

/// One application of the right-hand side map, A f(X) B + C.
Matrix apply_rhs(const LinearMatrixEquation& eq, const Matrix& x);

/// i-fold composition of the right-hand side map with itself.
Matrix iterate_rhs(const LinearMatrixEquation& eq, int i, const Matrix& x);

/// The homogeneous part iterated i times: X, then A f(X) B, then
/// A f(A f(X) B) B, and so on. This recursion is the operational ground
/// truth every closed-form product below is checked against.
Matrix homogeneous_iterate(const LinearMatrixEquation& eq, int i, const Matrix& x);

/// Closed product form of the i-th homogeneous iterate for
/// order-preserving f:
///
///   f^(0)(A) ... f^(i-1)(A) * f^(i)(X) * f^(i-1)(B) ... f^(0)(B)
///
/// Coincides with homogeneous_iterate in exact arithmetic. Throws
/// UnsupportedOperatorError for order-reversing operators, whose products
/// interleave A- and B-factors instead.
Matrix product_iterate(const LinearMatrixEquation& eq, int i, const Matrix& x);

/// Construct the associated Stein system. For order-preserving f the
/// coefficients are the straight products above; for order-reversing f
/// the factors of A and B interleave, with separate closed forms for even
/// and odd periods. In every case
///
///   homogeneous_iterate(eq, n, X) == calA * X * calB        for all X,
///   calC == sum of homogeneous_iterate(eq, j, C) for j < n.
SteinSystem build_stein(const LinearMatrixEquation& eq);

/// Stein system of the k-fold composition (kn applications of the
/// right-hand side): coefficients calA^k, calB^k and the accumulated
/// constant sum_{t<k} calA^t calC calB^t.
SteinSystem build_stein_power(const LinearMatrixEquation& eq, int k);

/// ||X - A f(X) B - C||_F, the residual in the original equation.
double equation_residual(const LinearMatrixEquation& eq, const Matrix& x);

/// ||X - calA X calB - calC||_F, the residual in the Stein equation.
double stein_residual(const SteinSystem& sys, const Matrix& x);

}  // namespace pstein

#endif  // PSTEIN_STEIN_TRANSFORM_HPP
