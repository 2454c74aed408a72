#ifndef PSTEIN_RECOVERY_HPP
#define PSTEIN_RECOVERY_HPP

#include "pstein/matrix.hpp"
#include "pstein/stein_transform.hpp"

namespace pstein {

/// Options for the gated recovery entry points.
struct RecoveryOptions {
  /// Relative Stein-residual gate: recovery refuses inputs whose Stein
  /// residual exceeds stein_gate_tol * (1 + ||X||_F).
  double stein_gate_tol = 1e-8;
};

/// The averaging map F(X) = (1/n) * sum_{i<n} of the i-fold right-hand
/// side composition applied to X. This is the canonical form; the other
/// evaluators below are closed-form rewritings of it.
///
/// On a solution of the Stein equation, F produces a solution of the
/// original equation; on a solution of the original equation, F is the
/// identity; and F is idempotent on Stein solutions.
Matrix orbit_average(const LinearMatrixEquation& eq, const Matrix& x);

/// Closed form of orbit_average with the constant terms aggregated by
/// count: (1/n) * sum_{i<n} [ P_i(X) + (n-i-1) * P_i(C) ] where P_i is
/// the i-th homogeneous product. Order-reversing operators use the
/// interleaved two-step products. Agrees with orbit_average on every
/// input, not just Stein solutions.
Matrix explicit_average(const LinearMatrixEquation& eq, const Matrix& x);

/// Variant aggregating the constants as prefix sums:
/// (1/n) * sum_{i<n} [ G_i(X) + sum_{j<i} G_j(C) ]. Only defined for
/// order-preserving operators. Agrees with explicit_average on every
/// input.
Matrix weighted_average(const LinearMatrixEquation& eq, const Matrix& x);

/// Average over k full periods, (1/(kn)) * sum_{i<kn} of the i-fold
/// composition. Equal to orbit_average on Stein solutions for every k;
/// the k-independence is part of the test suite.
Matrix multi_period_average(const LinearMatrixEquation& eq, const Matrix& x, int k);

/// The equation obtained by substituting the Stein normal form back into
/// the original once, after k extra Stein rounds:
///
///   Y = (calA^k A) f(Y) (B calB^k) + calA^k C calB^k + sum_{j<k} calA^j calC calB^j
///
/// Its right-hand side equals the (kn+1)-fold composition of the original
/// right-hand side.
LinearMatrixEquation substituted_equation(const LinearMatrixEquation& eq, int k);

/// orbit_average of the substituted equation, evaluated at Y. Sends Stein
/// solutions of the original system to solutions of the original
/// equation, and fixes solutions of the original equation.
Matrix substituted_average(const LinearMatrixEquation& eq, const Matrix& y, int k);

/// Gated recovery: verifies that x solves the associated Stein equation
/// within the gate tolerance (throwing NotASteinSolutionError otherwise),
/// then applies the corresponding evaluator above.
Matrix recover(const LinearMatrixEquation& eq, const Matrix& x,
               const RecoveryOptions& opts = {});
Matrix recover_explicit(const LinearMatrixEquation& eq, const Matrix& x,
                        const RecoveryOptions& opts = {});
Matrix recover_weighted(const LinearMatrixEquation& eq, const Matrix& x,
                        const RecoveryOptions& opts = {});
Matrix recover_multi_period(const LinearMatrixEquation& eq, const Matrix& x,
                            int k, const RecoveryOptions& opts = {});
Matrix recover_substituted(const LinearMatrixEquation& eq, const Matrix& y,
                           int k, const RecoveryOptions& opts = {});

/// Result of checking F(F(X)) == F(X) on a Stein solution.
struct IdempotenceReport {
  double deviation = 0.0;  ///< ||F(F(X)) - F(X)||_F
  double tol = 0.0;
  bool passed = false;
};

/// Measure the idempotence defect of the averaging map at a Stein
/// solution x. Same gate as recover.
IdempotenceReport idempotence_check(const LinearMatrixEquation& eq,
                                    const Matrix& x, double tol = 1e-10,
                                    const RecoveryOptions& opts = {});

}  // namespace pstein

#endif  // PSTEIN_RECOVERY_HPP
